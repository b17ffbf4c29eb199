// Copyright 2026 The dsdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSDLAB_SUBSPACE_ENUM_H
#define DSDLAB_SUBSPACE_ENUM_H

#include <optional>
#include <vector>

#include "dsdlab/limits.h"
#include "dsdlab/subspace.h"

namespace dsdlab {

/// Every subspace of dimension k (or of every dimension when k is empty),
/// each exactly once, in canonical order.
std::vector<Subspace> all_subspaces(const FieldParam &field, std::optional<uint32_t> k,
                                    const Limits &limits = Limits::from_environment());

/// Subspaces b with a ∩ b = 0 and dim b = n - dim a.
std::vector<Subspace> complements(const Subspace &a, const Limits &limits = Limits::from_environment());

}  // namespace dsdlab

#endif
