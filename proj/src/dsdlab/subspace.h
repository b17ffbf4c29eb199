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

#ifndef DSDLAB_SUBSPACE_H
#define DSDLAB_SUBSPACE_H

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "dsdlab/field.h"

namespace dsdlab {

/// A subspace of GF(q)^n held in canonical reduced row echelon form: pivot
/// columns strictly increase, pivot entries are 1 and pivot columns are zero
/// in every other row. Equal subspaces therefore have identical bases, and
/// the defaulted comparison is a total order (field first, then the
/// concatenated basis coordinates lexicographically).
class Subspace {
   public:
    static Subspace zero(const FieldParam &field);
    static Subspace full(const FieldParam &field);

    const FieldParam &field() const {
        return field_;
    }
    const std::vector<Vector> &basis() const {
        return basis_;
    }
    size_t dim() const {
        return basis_.size();
    }
    bool is_zero() const {
        return basis_.empty();
    }

    /// Column index of each row's leading 1.
    std::vector<uint32_t> pivots() const;

    /// All q^dim members, in coefficient-counter order.
    std::vector<Vector> elements() const;

    std::string str() const;

    auto operator<=>(const Subspace &) const = default;

   private:
    friend Subspace canonicalize(std::span<const Vector> vectors, const FieldParam &field);
    friend Subspace canonicalize_generic(std::span<const Vector> vectors, const FieldParam &field);
    Subspace(FieldParam field, std::vector<Vector> basis) : field_(field), basis_(std::move(basis)) {
    }

    FieldParam field_;
    std::vector<Vector> basis_;
};

/// Canonical RREF basis of span(vectors). Uses XOR row reduction on machine
/// words when q = 2; otherwise residue arithmetic.
Subspace canonicalize(std::span<const Vector> vectors, const FieldParam &field);
Subspace canonicalize(std::initializer_list<Vector> vectors, const FieldParam &field);

/// Residue-arithmetic path for every q. Exposed so the q = 2 word path can be
/// checked against it.
Subspace canonicalize_generic(std::span<const Vector> vectors, const FieldParam &field);

/// Reduces v against an RREF basis; the result is zero iff v is in the span.
Vector reduce(const Subspace &space, const Vector &v);

Subspace intersect(const Subspace &a, const Subspace &b);
Subspace sum(const Subspace &a, const Subspace &b);
Subspace sum(std::span<const Subspace> parts, const FieldParam &field);
bool contains(const Subspace &a, const Vector &v);
bool is_subspace_of(const Subspace &inner, const Subspace &outer);

/// Unique decomposition v = sum of v_i with v_i in blocks[i]. Throws NotADsd
/// when the blocks are not a direct-sum decomposition of the whole space.
std::vector<Vector> components_along(std::span<const Subspace> blocks, const Vector &v);

void check_same_field(const Subspace &a, const Subspace &b);

}  // namespace dsdlab

#endif
