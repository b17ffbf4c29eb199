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

#include "dsdlab/field.h"

#include "dsdlab/error.h"

namespace dsdlab {

bool is_prime(uint64_t value) {
    if (value < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= value; d++) {
        if (value % d == 0) {
            return false;
        }
    }
    return true;
}

FieldParam FieldParam::make(uint32_t q, uint32_t n) {
    if (!is_prime(q)) {
        throw DsdError(ErrorCode::InvalidArgument, "q=" + std::to_string(q) + " is not prime");
    }
    return FieldParam{q, n};
}

uint64_t FieldParam::space_size() const {
    uint64_t size = 1;
    for (uint32_t i = 0; i < n; i++) {
        if (size > UINT64_MAX / q) {
            throw DsdError(ErrorCode::CeilingExceeded, "q^n does not fit in 64 bits for " + str());
        }
        size *= q;
    }
    return size;
}

std::string FieldParam::str() const {
    return "GF(" + std::to_string(q) + ")^" + std::to_string(n);
}

Vector Vector::from_bits(uint64_t bits, size_t n) {
    if (n < 64 && (bits >> n) != 0) {
        throw DsdError(ErrorCode::DimensionMismatch,
                       "bit vector " + std::to_string(bits) + " has bits beyond n=" + std::to_string(n));
    }
    std::vector<uint32_t> coords(n);
    for (size_t i = 0; i < n; i++) {
        coords[i] = (bits >> i) & 1;
    }
    return Vector(std::move(coords));
}

Vector Vector::unpack(uint64_t code, const FieldParam &field) {
    std::vector<uint32_t> coords(field.n);
    for (uint32_t i = 0; i < field.n; i++) {
        coords[i] = static_cast<uint32_t>(code % field.q);
        code /= field.q;
    }
    if (code != 0) {
        throw DsdError(ErrorCode::DimensionMismatch, "packed vector out of range for " + field.str());
    }
    return Vector(std::move(coords));
}

uint64_t Vector::to_bits() const {
    if (coords_.size() > 64) {
        throw DsdError(ErrorCode::DimensionMismatch, "bit encoding limited to n <= 64");
    }
    uint64_t bits = 0;
    for (size_t i = 0; i < coords_.size(); i++) {
        if (coords_[i] > 1) {
            throw DsdError(ErrorCode::DimensionMismatch, "bit encoding needs 0/1 entries");
        }
        bits |= uint64_t{coords_[i]} << i;
    }
    return bits;
}

uint64_t Vector::pack(uint32_t q) const {
    uint64_t code = 0;
    for (size_t i = coords_.size(); i-- > 0;) {
        code = code * q + coords_[i];
    }
    return code;
}

bool Vector::is_zero() const {
    for (uint32_t c : coords_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

std::string Vector::str() const {
    std::string out;
    for (uint32_t c : coords_) {
        if (c < 10) {
            out.push_back(static_cast<char>('0' + c));
        } else {
            out += "(" + std::to_string(c) + ")";
        }
    }
    return out;
}

void check_vector(const Vector &v, const FieldParam &field) {
    if (v.size() != field.n) {
        throw DsdError(ErrorCode::DimensionMismatch, "vector " + v.str() + " has length " + std::to_string(v.size()) +
                                                         ", expected " + std::to_string(field.n));
    }
    for (uint32_t c : v.coords()) {
        if (c >= field.q) {
            throw DsdError(ErrorCode::DimensionMismatch,
                           "entry " + std::to_string(c) + " not reduced mod " + std::to_string(field.q));
        }
    }
}

Vector add(const Vector &a, const Vector &b, uint32_t q) {
    if (a.size() != b.size()) {
        throw DsdError(ErrorCode::DimensionMismatch, "vector lengths differ");
    }
    std::vector<uint32_t> out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = (a[i] + b[i]) % q;
    }
    return Vector(std::move(out));
}

Vector scale(const Vector &a, uint32_t factor, uint32_t q) {
    std::vector<uint32_t> out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = static_cast<uint32_t>((uint64_t{a[i]} * factor) % q);
    }
    return Vector(std::move(out));
}

uint32_t mod_inverse(uint32_t a, uint32_t q) {
    int64_t t = 0, new_t = 1;
    int64_t r = q, new_r = a % q;
    while (new_r != 0) {
        int64_t quotient = r / new_r;
        int64_t tmp = t - quotient * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quotient * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) {
        throw DsdError(ErrorCode::InvalidArgument, std::to_string(a) + " has no inverse mod " + std::to_string(q));
    }
    if (t < 0) {
        t += q;
    }
    return static_cast<uint32_t>(t);
}

}  // namespace dsdlab
