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

#include "dsdlab/subspace.h"

#include <utility>

#include "dsdlab/error.h"

namespace dsdlab {

namespace {

std::vector<Vector> rref_rows(std::vector<Vector> rows, uint32_t q, uint32_t n) {
    size_t pivot_row = 0;
    for (uint32_t col = 0; col < n && pivot_row < rows.size(); col++) {
        size_t found = pivot_row;
        while (found < rows.size() && rows[found][col] == 0) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        uint32_t inv = mod_inverse(rows[pivot_row][col], q);
        if (inv != 1) {
            rows[pivot_row] = scale(rows[pivot_row], inv, q);
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == pivot_row || rows[r][col] == 0) {
                continue;
            }
            uint32_t factor = q - rows[r][col];
            rows[r] = add(rows[r], scale(rows[pivot_row], factor, q), q);
        }
        pivot_row++;
    }
    rows.resize(pivot_row);
    return rows;
}

// XOR elimination on q = 2 rows packed as words (bit i = coordinate i).
void rref_bits(std::vector<uint64_t> &rows, uint32_t width) {
    size_t pivot_row = 0;
    for (uint32_t col = 0; col < width && pivot_row < rows.size(); col++) {
        const uint64_t bit = uint64_t{1} << col;
        size_t found = pivot_row;
        while (found < rows.size() && !(rows[found] & bit)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != pivot_row && (rows[r] & bit)) {
                rows[r] ^= rows[pivot_row];
            }
        }
        pivot_row++;
    }
    rows.resize(pivot_row);
}

}  // namespace

Subspace Subspace::zero(const FieldParam &field) {
    return Subspace(field, {});
}

Subspace Subspace::full(const FieldParam &field) {
    std::vector<Vector> basis;
    for (uint32_t i = 0; i < field.n; i++) {
        Vector e = Vector::zero(field.n);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    return Subspace(field, std::move(basis));
}

std::vector<uint32_t> Subspace::pivots() const {
    std::vector<uint32_t> out;
    for (const auto &row : basis_) {
        uint32_t col = 0;
        while (row[col] == 0) {
            col++;
        }
        out.push_back(col);
    }
    return out;
}

std::vector<Vector> Subspace::elements() const {
    std::vector<Vector> out;
    std::vector<uint32_t> coeff(basis_.size(), 0);
    while (true) {
        Vector v = Vector::zero(field_.n);
        for (size_t i = 0; i < basis_.size(); i++) {
            if (coeff[i] != 0) {
                v = add(v, scale(basis_[i], coeff[i], field_.q), field_.q);
            }
        }
        out.push_back(std::move(v));
        size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == field_.q) {
            coeff[i] = 0;
            i++;
        }
        if (i == coeff.size()) {
            break;
        }
    }
    return out;
}

std::string Subspace::str() const {
    std::string out = "span{";
    for (size_t i = 0; i < basis_.size(); i++) {
        if (i) {
            out += ",";
        }
        out += basis_[i].str();
    }
    return out + "}";
}

Subspace canonicalize_generic(std::span<const Vector> vectors, const FieldParam &field) {
    std::vector<Vector> rows;
    rows.reserve(vectors.size());
    for (const auto &v : vectors) {
        check_vector(v, field);
        rows.push_back(v);
    }
    return Subspace(field, rref_rows(std::move(rows), field.q, field.n));
}

Subspace canonicalize(std::span<const Vector> vectors, const FieldParam &field) {
    if (field.q == 2 && field.n <= 64) {
        std::vector<uint64_t> rows;
        rows.reserve(vectors.size());
        for (const auto &v : vectors) {
            check_vector(v, field);
            rows.push_back(v.to_bits());
        }
        rref_bits(rows, field.n);
        std::vector<Vector> basis;
        basis.reserve(rows.size());
        for (uint64_t row : rows) {
            basis.push_back(Vector::from_bits(row, field.n));
        }
        return Subspace(field, std::move(basis));
    }
    return canonicalize_generic(vectors, field);
}

Subspace canonicalize(std::initializer_list<Vector> vectors, const FieldParam &field) {
    return canonicalize(std::span<const Vector>(vectors.begin(), vectors.size()), field);
}

void check_same_field(const Subspace &a, const Subspace &b) {
    if (a.field() != b.field()) {
        throw DsdError(ErrorCode::FieldMismatch, "subspaces over " + a.field().str() + " and " + b.field().str());
    }
}

Vector reduce(const Subspace &space, const Vector &v) {
    check_vector(v, space.field());
    const uint32_t q = space.field().q;
    Vector r = v;
    const auto pivots = space.pivots();
    for (size_t i = 0; i < pivots.size(); i++) {
        uint32_t c = r[pivots[i]];
        if (c != 0) {
            r = add(r, scale(space.basis()[i], q - c, q), q);
        }
    }
    return r;
}

bool contains(const Subspace &a, const Vector &v) {
    return reduce(a, v).is_zero();
}

bool is_subspace_of(const Subspace &inner, const Subspace &outer) {
    check_same_field(inner, outer);
    if (inner.dim() > outer.dim()) {
        return false;
    }
    for (const auto &v : inner.basis()) {
        if (!contains(outer, v)) {
            return false;
        }
    }
    return true;
}

Subspace sum(const Subspace &a, const Subspace &b) {
    check_same_field(a, b);
    std::vector<Vector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return canonicalize(rows, a.field());
}

Subspace sum(std::span<const Subspace> parts, const FieldParam &field) {
    std::vector<Vector> rows;
    for (const auto &p : parts) {
        if (p.field() != field) {
            throw DsdError(ErrorCode::FieldMismatch, "subspace over " + p.field().str() + ", expected " + field.str());
        }
        rows.insert(rows.end(), p.basis().begin(), p.basis().end());
    }
    return canonicalize(rows, field);
}

Subspace intersect(const Subspace &a, const Subspace &b) {
    // Zassenhaus: reduce the rows (a_i | a_i) and (b_j | 0); the rows whose
    // left half vanishes span the intersection in their right half.
    check_same_field(a, b);
    const FieldParam &field = a.field();
    const uint32_t n = field.n;
    if (field.q == 2 && 2 * n <= 64) {
        std::vector<uint64_t> packed;
        for (const auto &v : a.basis()) {
            uint64_t bits = v.to_bits();
            packed.push_back(bits | (bits << n));
        }
        for (const auto &v : b.basis()) {
            packed.push_back(v.to_bits());
        }
        rref_bits(packed, 2 * n);
        const uint64_t left = n == 0 ? 0 : (~uint64_t{0} >> (64 - n));
        std::vector<Vector> meet;
        for (uint64_t row : packed) {
            if ((row & left) == 0) {
                meet.push_back(Vector::from_bits(row >> n, n));
            }
        }
        return canonicalize(meet, field);
    }
    std::vector<Vector> rows;
    for (const auto &v : a.basis()) {
        std::vector<uint32_t> c(v.coords().begin(), v.coords().end());
        c.insert(c.end(), v.coords().begin(), v.coords().end());
        rows.emplace_back(std::move(c));
    }
    for (const auto &v : b.basis()) {
        std::vector<uint32_t> c(v.coords().begin(), v.coords().end());
        c.resize(2 * n, 0);
        rows.emplace_back(std::move(c));
    }
    rows = rref_rows(std::move(rows), field.q, 2 * n);
    std::vector<Vector> meet;
    for (const auto &row : rows) {
        bool left_zero = true;
        for (uint32_t i = 0; i < n; i++) {
            if (row[i] != 0) {
                left_zero = false;
                break;
            }
        }
        if (left_zero) {
            meet.emplace_back(std::vector<uint32_t>(row.coords().begin() + n, row.coords().end()));
        }
    }
    return canonicalize(meet, field);
}

std::vector<Vector> components_along(std::span<const Subspace> blocks, const Vector &v) {
    if (blocks.empty()) {
        if (!v.is_zero()) {
            throw DsdError(ErrorCode::NotADsd, "no blocks to decompose a nonzero vector");
        }
        return {};
    }
    const FieldParam field = blocks.front().field();
    check_vector(v, field);
    const uint32_t q = field.q;
    const uint32_t n = field.n;

    std::vector<Vector> columns;
    std::vector<size_t> owner;
    for (size_t b = 0; b < blocks.size(); b++) {
        if (blocks[b].field() != field) {
            throw DsdError(ErrorCode::FieldMismatch, "blocks over different fields");
        }
        for (const auto &basis_vector : blocks[b].basis()) {
            columns.push_back(basis_vector);
            owner.push_back(b);
        }
    }
    if (columns.size() != n) {
        throw DsdError(ErrorCode::NotADsd, "block dimensions sum to " + std::to_string(columns.size()) +
                                               ", expected " + std::to_string(n));
    }

    // Augmented system [columns | v], solved by Gauss-Jordan elimination.
    std::vector<std::vector<uint32_t>> m(n, std::vector<uint32_t>(n + 1));
    for (uint32_t r = 0; r < n; r++) {
        for (uint32_t c = 0; c < n; c++) {
            m[r][c] = columns[c][r];
        }
        m[r][n] = v[r];
    }
    for (uint32_t col = 0; col < n; col++) {
        uint32_t found = col;
        while (found < n && m[found][col] == 0) {
            found++;
        }
        if (found == n) {
            throw DsdError(ErrorCode::NotADsd, "blocks are not independent");
        }
        std::swap(m[col], m[found]);
        uint32_t inv = mod_inverse(m[col][col], q);
        for (auto &x : m[col]) {
            x = static_cast<uint32_t>((uint64_t{x} * inv) % q);
        }
        for (uint32_t r = 0; r < n; r++) {
            if (r == col || m[r][col] == 0) {
                continue;
            }
            uint32_t factor = q - m[r][col];
            for (uint32_t c = 0; c <= n; c++) {
                m[r][c] = static_cast<uint32_t>((m[r][c] + uint64_t{factor} * m[col][c]) % q);
            }
        }
    }

    std::vector<Vector> parts(blocks.size(), Vector::zero(n));
    for (uint32_t c = 0; c < n; c++) {
        uint32_t coeff = m[c][n];
        if (coeff != 0) {
            parts[owner[c]] = add(parts[owner[c]], scale(columns[c], coeff, q), q);
        }
    }
    return parts;
}

}  // namespace dsdlab
