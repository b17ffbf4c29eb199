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

#ifndef DSDLAB_PARTITION_LOGIC_H
#define DSDLAB_PARTITION_LOGIC_H

#include <string>
#include <vector>

#include "dsdlab/dsd.h"

namespace dsdlab {

/// Partition of {0, ..., n-1}. Blocks are kept sorted internally and ordered
/// by their smallest element.
class SetPartition {
   public:
    /// Throws InvalidArgument unless the blocks are nonempty, disjoint and
    /// cover {0, ..., n-1}.
    static SetPartition make(std::vector<std::vector<size_t>> blocks, size_t n);
    static SetPartition discrete(size_t n);
    static SetPartition indiscrete(size_t n);

    size_t universe_size() const {
        return n_;
    }
    const std::vector<std::vector<size_t>> &blocks() const {
        return blocks_;
    }
    /// Index of the block holding element i.
    size_t block_of(size_t i) const;

    std::string str() const;

    auto operator<=>(const SetPartition &) const = default;

   private:
    SetPartition(size_t n, std::vector<std::vector<size_t>> blocks) : n_(n), blocks_(std::move(blocks)) {
    }
    size_t n_ = 0;
    std::vector<std::vector<size_t>> blocks_;
};

/// Every set partition of {0, ..., n-1}, in restricted-growth-string order.
std::vector<SetPartition> all_set_partitions(size_t n);

/// A fixed maximal decomposition ω (an unordered basis of rays) and the
/// partition logic of all decompositions it refines.
class PartitionLogicContext {
   public:
    /// Throws InvalidArgument unless omega is maximal.
    explicit PartitionLogicContext(Dsd omega);

    const Dsd &omega() const {
        return omega_;
    }
    const FieldParam &field() const {
        return omega_.field();
    }
    const Subspace &ray(size_t i) const {
        return omega_.blocks()[i];
    }
    /// Position of a ray of ω; throws InvalidArgument for anything else.
    size_t ray_index(const Subspace &ray) const;

    /// p ⪯ ω.
    bool in_logic(const Dsd &p) const;

   private:
    Dsd omega_;
};

/// σ ⇒ π: each block of π contained in a block of σ is split into the rays of
/// ω it holds; other blocks stay. Equals ω exactly when σ ⪯ π. Throws
/// NotInLogic unless both arguments are refined by ω.
Dsd implication(const Dsd &sigma, const Dsd &pi, const PartitionLogicContext &ctx);

SetPartition to_set_partition(const Dsd &p, const PartitionLogicContext &ctx);
Dsd from_set_partition(const SetPartition &sp, const PartitionLogicContext &ctx);

/// All two-block decompositions refined by ω; there are 2^(n-1) - 1.
std::vector<Dsd> atoms_below(const PartitionLogicContext &ctx);

}  // namespace dsdlab

#endif
