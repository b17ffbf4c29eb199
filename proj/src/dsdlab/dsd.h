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

#ifndef DSDLAB_DSD_H
#define DSDLAB_DSD_H

#include <compare>
#include <string>
#include <vector>

#include "dsdlab/subspace.h"

namespace dsdlab {

/// Direct-sum decomposition: nonzero subspaces, sorted canonically, whose
/// direct sum is the whole space.
class Dsd {
   public:
    /// Checks the direct-sum condition and sorts the blocks. Throws ZeroBlock,
    /// FieldMismatch or NotSpanning (which covers both a dimension deficit and
    /// overlapping blocks).
    static Dsd validate(std::vector<Subspace> blocks, const FieldParam &field);
    static Dsd validate(std::vector<Subspace> blocks);

    /// The one-block decomposition {V}. Empty for n = 0.
    static Dsd blob(const FieldParam &field);

    const FieldParam &field() const {
        return field_;
    }
    const std::vector<Subspace> &blocks() const {
        return blocks_;
    }
    size_t size() const {
        return blocks_.size();
    }
    bool is_blob() const {
        return blocks_.size() <= 1;
    }
    /// n one-dimensional blocks.
    bool is_maximal() const {
        return blocks_.size() == field_.n;
    }

    std::vector<size_t> block_dims() const;
    std::string str() const;

    auto operator<=>(const Dsd &) const = default;

   private:
    Dsd(FieldParam field, std::vector<Subspace> blocks) : field_(field), blocks_(std::move(blocks)) {
    }

    FieldParam field_;
    std::vector<Subspace> blocks_;
};

/// Nonzero pairwise intersections {V_i ∩ W_j}, canonical order. Their sum is
/// always direct.
std::vector<Subspace> proto_join(const Dsd &p, const Dsd &s);

/// The proto-join spans the space, i.e. its dimensions add up to n.
bool compatible(const Dsd &p, const Dsd &s);

/// Least upper bound of compatible decompositions; throws Incompatible.
Dsd join(const Dsd &p, const Dsd &s);

/// Greatest lower bound. Blocks of p and s are linked when a basis vector of
/// a p-block has a nonzero component in an s-block; each connected component
/// contributes the sum of its p-blocks as one meet block.
Dsd meet(const Dsd &p, const Dsd &s);

/// True iff coarse ⪯ fine: every block of fine lies inside some block of coarse.
bool refines(const Dsd &coarse, const Dsd &fine);

void check_same_field(const Dsd &a, const Dsd &b);

}  // namespace dsdlab

#endif
