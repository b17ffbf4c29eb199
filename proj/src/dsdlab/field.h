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

#ifndef DSDLAB_FIELD_H
#define DSDLAB_FIELD_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dsdlab {

bool is_prime(uint64_t value);

/// Ambient space GF(q)^n. Concrete algebra requires q prime.
struct FieldParam {
    uint32_t q = 2;
    uint32_t n = 0;

    /// Validated constructor: throws InvalidArgument unless q is prime.
    static FieldParam make(uint32_t q, uint32_t n);

    /// Number of vectors in the space, q^n. Throws when it does not fit 64 bits.
    uint64_t space_size() const;

    std::string str() const;

    auto operator<=>(const FieldParam &) const = default;
};

/// Coordinate vector; coordinate 0 first. Entries are residues mod q.
class Vector {
   public:
    Vector() = default;
    explicit Vector(std::vector<uint32_t> coords) : coords_(std::move(coords)) {
    }

    static Vector zero(size_t n) {
        return Vector(std::vector<uint32_t>(n, 0));
    }
    /// q=2 encoding: bit i holds coordinate i.
    static Vector from_bits(uint64_t bits, size_t n);
    /// Base-q packing, coordinate 0 least significant. For q=2 this is the bit encoding.
    static Vector unpack(uint64_t code, const FieldParam &field);

    uint64_t to_bits() const;
    uint64_t pack(uint32_t q) const;

    size_t size() const {
        return coords_.size();
    }
    uint32_t operator[](size_t i) const {
        return coords_[i];
    }
    uint32_t &operator[](size_t i) {
        return coords_[i];
    }
    std::span<const uint32_t> coords() const {
        return coords_;
    }
    bool is_zero() const;

    /// Coordinates as a digit string, e.g. "101" for (1,0,1).
    std::string str() const;

    auto operator<=>(const Vector &) const = default;

   private:
    std::vector<uint32_t> coords_;
};

/// Checks length n and entries in [0, q); throws DimensionMismatch otherwise.
void check_vector(const Vector &v, const FieldParam &field);

Vector add(const Vector &a, const Vector &b, uint32_t q);
Vector scale(const Vector &a, uint32_t factor, uint32_t q);

uint32_t mod_inverse(uint32_t a, uint32_t q);

}  // namespace dsdlab

#endif
