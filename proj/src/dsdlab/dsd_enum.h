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

#ifndef DSDLAB_DSD_ENUM_H
#define DSDLAB_DSD_ENUM_H

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dsdlab/dsd.h"
#include "dsdlab/limits.h"
#include "dsdlab/numeric.h"

namespace dsdlab {

struct DsdQuery {
    /// Number of blocks; empty means every m.
    std::optional<uint32_t> blocks;
    /// Keep only DSDs with a block containing this nonzero vector.
    std::optional<Vector> anchor;
};

/// Visits every matching DSD exactly once in canonical order (blocks sorted
/// within a DSD, DSDs lexicographic). Returning false from the visitor stops
/// the walk early.
void for_each_dsd(const FieldParam &field, const DsdQuery &query, const std::function<bool(const Dsd &)> &visit,
                  const Limits &limits = Limits::from_environment());

std::vector<Dsd> enumerate_dsds(const FieldParam &field, const DsdQuery &query = {},
                                const Limits &limits = Limits::from_environment());

/// Same walk as for_each_dsd without materializing the decompositions.
uint64_t count_dsds(const FieldParam &field, const DsdQuery &query = {},
                    const Limits &limits = Limits::from_environment());

struct MaximalAbove {
    BigInt count;
    /// Present when the field is within the enumeration ceiling.
    std::optional<std::vector<Dsd>> list;
};

/// Maximal DSDs refining a two-block DSD. The count comes from the closed
/// form; the list from filtering the enumeration. Throws NotAnAtom.
MaximalAbove maximal_above(const Dsd &atom, const Limits &limits = Limits::from_environment());

}  // namespace dsdlab

#endif
