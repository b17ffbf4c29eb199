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

#include "dsdlab/partition_logic.h"

#include <algorithm>

#include "dsdlab/error.h"

namespace dsdlab {

SetPartition SetPartition::make(std::vector<std::vector<size_t>> blocks, size_t n) {
    std::vector<bool> seen(n, false);
    for (auto &b : blocks) {
        if (b.empty()) {
            throw DsdError(ErrorCode::EmptyBlock, "set partition has an empty block");
        }
        std::sort(b.begin(), b.end());
        for (size_t x : b) {
            if (x >= n) {
                throw DsdError(ErrorCode::InvalidArgument, "element " + std::to_string(x) + " outside universe");
            }
            if (seen[x]) {
                throw DsdError(ErrorCode::InvalidArgument, "element " + std::to_string(x) + " in two blocks");
            }
            seen[x] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw DsdError(ErrorCode::InvalidArgument, "set partition does not cover the universe");
    }
    std::sort(blocks.begin(), blocks.end());
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::discrete(size_t n) {
    std::vector<std::vector<size_t>> blocks;
    for (size_t i = 0; i < n; i++) {
        blocks.push_back({i});
    }
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::indiscrete(size_t n) {
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; i++) {
        all[i] = i;
    }
    if (n == 0) {
        return SetPartition(0, {});
    }
    return SetPartition(n, {all});
}

size_t SetPartition::block_of(size_t i) const {
    for (size_t b = 0; b < blocks_.size(); b++) {
        if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), i)) {
            return b;
        }
    }
    throw DsdError(ErrorCode::InvalidArgument, "element " + std::to_string(i) + " outside universe");
}

std::string SetPartition::str() const {
    std::string out = "{";
    for (size_t b = 0; b < blocks_.size(); b++) {
        out += b ? ",{" : "{";
        for (size_t k = 0; k < blocks_[b].size(); k++) {
            out += (k ? "," : "") + std::to_string(blocks_[b][k]);
        }
        out += "}";
    }
    return out + "}";
}

std::vector<SetPartition> all_set_partitions(size_t n) {
    std::vector<SetPartition> out;
    if (n == 0) {
        out.push_back(SetPartition::make({}, 0));
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<size_t> a(n, 0);
    while (true) {
        size_t blocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<size_t>> parts(blocks);
        for (size_t i = 0; i < n; i++) {
            parts[a[i]].push_back(i);
        }
        out.push_back(SetPartition::make(std::move(parts), n));

        size_t i = n - 1;
        while (i > 0) {
            size_t prefix_max = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
            if (a[i] <= prefix_max) {
                a[i]++;
                std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
                break;
            }
            i--;
        }
        if (i == 0) {
            break;
        }
    }
    return out;
}

PartitionLogicContext::PartitionLogicContext(Dsd omega) : omega_(std::move(omega)) {
    if (!omega_.is_maximal()) {
        throw DsdError(ErrorCode::InvalidArgument, "partition logic needs a maximal DSD, got " + omega_.str());
    }
}

size_t PartitionLogicContext::ray_index(const Subspace &r) const {
    const auto &rays = omega_.blocks();
    auto it = std::lower_bound(rays.begin(), rays.end(), r);
    if (it == rays.end() || *it != r) {
        throw DsdError(ErrorCode::InvalidArgument, r.str() + " is not a ray of omega");
    }
    return static_cast<size_t>(it - rays.begin());
}

bool PartitionLogicContext::in_logic(const Dsd &p) const {
    return p.field() == field() && refines(p, omega_);
}

namespace {

void require_in_logic(const Dsd &p, const PartitionLogicContext &ctx) {
    if (!ctx.in_logic(p)) {
        throw DsdError(ErrorCode::NotInLogic, p.str() + " is not refined by omega " + ctx.omega().str());
    }
}

std::vector<size_t> rays_inside(const Subspace &block, const PartitionLogicContext &ctx) {
    std::vector<size_t> out;
    for (size_t i = 0; i < ctx.omega().size(); i++) {
        if (is_subspace_of(ctx.ray(i), block)) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace

Dsd implication(const Dsd &sigma, const Dsd &pi, const PartitionLogicContext &ctx) {
    require_in_logic(sigma, ctx);
    require_in_logic(pi, ctx);
    std::vector<Subspace> blocks;
    for (const auto &v : pi.blocks()) {
        bool contained = std::any_of(sigma.blocks().begin(), sigma.blocks().end(),
                                     [&](const Subspace &w) { return is_subspace_of(v, w); });
        if (contained) {
            for (size_t i : rays_inside(v, ctx)) {
                blocks.push_back(ctx.ray(i));
            }
        } else {
            blocks.push_back(v);
        }
    }
    return Dsd::validate(std::move(blocks), ctx.field());
}

SetPartition to_set_partition(const Dsd &p, const PartitionLogicContext &ctx) {
    require_in_logic(p, ctx);
    std::vector<std::vector<size_t>> blocks;
    for (const auto &v : p.blocks()) {
        blocks.push_back(rays_inside(v, ctx));
    }
    return SetPartition::make(std::move(blocks), ctx.omega().size());
}

Dsd from_set_partition(const SetPartition &sp, const PartitionLogicContext &ctx) {
    if (sp.universe_size() != ctx.omega().size()) {
        throw DsdError(ErrorCode::DimensionMismatch, "set partition universe differs from the number of rays");
    }
    std::vector<Subspace> blocks;
    for (const auto &b : sp.blocks()) {
        std::vector<Subspace> rays;
        for (size_t i : b) {
            rays.push_back(ctx.ray(i));
        }
        blocks.push_back(sum(rays, ctx.field()));
    }
    return Dsd::validate(std::move(blocks), ctx.field());
}

std::vector<Dsd> atoms_below(const PartitionLogicContext &ctx) {
    const size_t n = ctx.omega().size();
    std::vector<Dsd> out;
    if (n < 2) {
        return out;
    }
    // Subsets containing ray 0 pick one side of each complementary pair.
    for (uint64_t mask = 1; mask < (uint64_t{1} << n) - 1; mask += 2) {
        std::vector<Subspace> side, other;
        for (size_t i = 0; i < n; i++) {
            ((mask >> i) & 1 ? side : other).push_back(ctx.ray(i));
        }
        out.push_back(Dsd::validate({sum(side, ctx.field()), sum(other, ctx.field())}, ctx.field()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dsdlab
