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

#ifndef DSDLAB_LIMITS_H
#define DSDLAB_LIMITS_H

#include <cstdint>
#include <map>

#include "dsdlab/field.h"

namespace dsdlab {

/// Largest ambient dimension n that exhaustive enumeration accepts, per q.
/// Defaults: n <= 5 for q = 2 (374 subspaces, 540,145 DSDs) and n <= 3
/// otherwise. Raising a ceiling is allowed; the enumeration cost grows
/// roughly like D_q(n), e.g. 364,558,049 DSDs at q = 2, n = 6.
class Limits {
   public:
    static Limits defaults();

    /// Defaults overridden by DSDLAB_CEILING_Q<q>=<n> environment variables.
    static Limits from_environment();

    /// Accepts any n.
    static Limits unbounded();

    uint32_t ceiling(uint32_t q) const;
    void set_ceiling(uint32_t q, uint32_t n);

    bool allows(const FieldParam &field) const;

    /// Throws CeilingExceeded naming the operation.
    void check(const FieldParam &field, const char *operation) const;

   private:
    std::map<uint32_t, uint32_t> overrides_;
    bool unbounded_ = false;
};

}  // namespace dsdlab

#endif
