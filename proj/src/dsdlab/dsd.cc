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

#include "dsdlab/dsd.h"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "dsdlab/error.h"

namespace dsdlab {

Dsd Dsd::validate(std::vector<Subspace> blocks, const FieldParam &field) {
    size_t total_dim = 0;
    for (const auto &b : blocks) {
        if (b.field() != field) {
            throw DsdError(ErrorCode::FieldMismatch, "block over " + b.field().str() + ", expected " + field.str());
        }
        if (b.is_zero()) {
            throw DsdError(ErrorCode::ZeroBlock, "a DSD block is the zero subspace");
        }
        total_dim += b.dim();
    }
    if (total_dim != field.n) {
        throw DsdError(ErrorCode::NotSpanning, "block dimensions sum to " + std::to_string(total_dim) +
                                                   ", expected n=" + std::to_string(field.n));
    }
    if (sum(blocks, field).dim() != field.n) {
        throw DsdError(ErrorCode::NotSpanning, "blocks overlap and do not span " + field.str());
    }
#ifndef NDEBUG
    for (size_t i = 0; i < blocks.size(); i++) {
        for (size_t j = i + 1; j < blocks.size(); j++) {
            assert(intersect(blocks[i], blocks[j]).is_zero());
        }
    }
#endif
    std::sort(blocks.begin(), blocks.end());
    return Dsd(field, std::move(blocks));
}

Dsd Dsd::validate(std::vector<Subspace> blocks) {
    if (blocks.empty()) {
        throw DsdError(ErrorCode::InvalidArgument, "an empty block list needs an explicit field");
    }
    FieldParam field = blocks.front().field();
    return validate(std::move(blocks), field);
}

Dsd Dsd::blob(const FieldParam &field) {
    if (field.n == 0) {
        return Dsd(field, {});
    }
    return Dsd(field, {Subspace::full(field)});
}

std::vector<size_t> Dsd::block_dims() const {
    std::vector<size_t> dims;
    for (const auto &b : blocks_) {
        dims.push_back(b.dim());
    }
    return dims;
}

std::string Dsd::str() const {
    std::string out = "{";
    for (size_t i = 0; i < blocks_.size(); i++) {
        if (i) {
            out += ", ";
        }
        out += blocks_[i].str();
    }
    return out + "}";
}

void check_same_field(const Dsd &a, const Dsd &b) {
    if (a.field() != b.field()) {
        throw DsdError(ErrorCode::FieldMismatch, "DSDs over " + a.field().str() + " and " + b.field().str());
    }
}

std::vector<Subspace> proto_join(const Dsd &p, const Dsd &s) {
    check_same_field(p, s);
    std::vector<Subspace> out;
    for (const auto &v : p.blocks()) {
        for (const auto &w : s.blocks()) {
            Subspace x = intersect(v, w);
            if (!x.is_zero()) {
                out.push_back(std::move(x));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool compatible(const Dsd &p, const Dsd &s) {
    size_t total = 0;
    for (const auto &x : proto_join(p, s)) {
        total += x.dim();
    }
    return total == p.field().n;
}

Dsd join(const Dsd &p, const Dsd &s) {
    auto parts = proto_join(p, s);
    size_t total = 0;
    for (const auto &x : parts) {
        total += x.dim();
    }
    if (total != p.field().n) {
        throw DsdError(ErrorCode::Incompatible, "join of incompatible DSDs " + p.str() + " and " + s.str());
    }
    return Dsd::validate(std::move(parts), p.field());
}

namespace {

size_t find_root(std::vector<size_t> &parent, size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

Dsd meet(const Dsd &p, const Dsd &s) {
    check_same_field(p, s);
    const size_t np = p.size();
    std::vector<size_t> parent(np + s.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (size_t i = 0; i < np; i++) {
        for (const auto &v : p.blocks()[i].basis()) {
            auto parts = components_along(s.blocks(), v);
            for (size_t j = 0; j < parts.size(); j++) {
                if (!parts[j].is_zero()) {
                    parent[find_root(parent, i)] = find_root(parent, np + j);
                }
            }
        }
    }
    std::vector<std::vector<Subspace>> groups(parent.size());
    for (size_t i = 0; i < np; i++) {
        groups[find_root(parent, i)].push_back(p.blocks()[i]);
    }
    std::vector<Subspace> blocks;
    for (const auto &g : groups) {
        if (!g.empty()) {
            blocks.push_back(sum(g, p.field()));
        }
    }
    return Dsd::validate(std::move(blocks), p.field());
}

bool refines(const Dsd &coarse, const Dsd &fine) {
    check_same_field(coarse, fine);
    for (const auto &v : fine.blocks()) {
        bool inside = false;
        for (const auto &w : coarse.blocks()) {
            if (is_subspace_of(v, w)) {
                inside = true;
                break;
            }
        }
        if (!inside) {
            return false;
        }
    }
    return true;
}

}  // namespace dsdlab
