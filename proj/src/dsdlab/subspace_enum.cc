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

#include "dsdlab/subspace_enum.h"

#include <algorithm>

#include "dsdlab/error.h"

namespace dsdlab {

namespace {

// Emits every RREF matrix with the given pivot columns by filling the free
// positions (right of a row's pivot, outside pivot columns) with all residues.
void emit_with_pivots(const FieldParam &field, const std::vector<uint32_t> &pivots, std::vector<Subspace> &out) {
    const uint32_t n = field.n;
    std::vector<std::pair<size_t, uint32_t>> free_slots;
    std::vector<bool> is_pivot(n, false);
    for (uint32_t p : pivots) {
        is_pivot[p] = true;
    }
    for (size_t r = 0; r < pivots.size(); r++) {
        for (uint32_t c = pivots[r] + 1; c < n; c++) {
            if (!is_pivot[c]) {
                free_slots.emplace_back(r, c);
            }
        }
    }
    std::vector<uint32_t> fill(free_slots.size(), 0);
    while (true) {
        std::vector<Vector> rows(pivots.size(), Vector::zero(n));
        for (size_t r = 0; r < pivots.size(); r++) {
            rows[r][pivots[r]] = 1;
        }
        for (size_t i = 0; i < free_slots.size(); i++) {
            rows[free_slots[i].first][free_slots[i].second] = fill[i];
        }
        out.push_back(canonicalize(rows, field));
        size_t i = 0;
        while (i < fill.size() && ++fill[i] == field.q) {
            fill[i] = 0;
            i++;
        }
        if (i == fill.size()) {
            break;
        }
    }
}

void emit_dimension(const FieldParam &field, uint32_t k, std::vector<Subspace> &out) {
    std::vector<uint32_t> pivots(k);
    for (uint32_t i = 0; i < k; i++) {
        pivots[i] = i;
    }
    while (true) {
        emit_with_pivots(field, pivots, out);
        // Next k-combination of {0..n-1} in lexicographic order.
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && pivots[i] == field.n - k + static_cast<uint32_t>(i)) {
            i--;
        }
        if (i < 0) {
            break;
        }
        pivots[i]++;
        for (uint32_t j = static_cast<uint32_t>(i) + 1; j < k; j++) {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
}

}  // namespace

std::vector<Subspace> all_subspaces(const FieldParam &field, std::optional<uint32_t> k, const Limits &limits) {
    limits.check(field, "subspace enumeration");
    std::vector<Subspace> out;
    if (k.has_value()) {
        if (*k > field.n) {
            throw DsdError(ErrorCode::InvalidArgument,
                           "dimension " + std::to_string(*k) + " exceeds n=" + std::to_string(field.n));
        }
        emit_dimension(field, *k, out);
    } else {
        for (uint32_t d = 0; d <= field.n; d++) {
            emit_dimension(field, d, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> complements(const Subspace &a, const Limits &limits) {
    const FieldParam &field = a.field();
    std::vector<Subspace> out;
    for (auto &b : all_subspaces(field, field.n - static_cast<uint32_t>(a.dim()), limits)) {
        if (intersect(a, b).is_zero()) {
            out.push_back(std::move(b));
        }
    }
    return out;
}

}  // namespace dsdlab
