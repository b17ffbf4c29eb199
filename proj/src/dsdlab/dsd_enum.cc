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

#include "dsdlab/dsd_enum.h"

#include <map>

#include "dsdlab/counting.h"
#include "dsdlab/error.h"
#include "dsdlab/subspace_enum.h"

namespace dsdlab {

namespace {

/// All nonzero subspaces of the space in canonical order, with their member
/// sets as bitsets over packed vector codes so that disjointness is a word-wise
/// AND. Sums are memoized by index pair.
class SubspaceCatalog {
   public:
    SubspaceCatalog(const FieldParam &field, const Limits &limits) : field_(field) {
        const uint64_t size = field.space_size();
        words_ = static_cast<size_t>((size + 63) / 64);
        zero_index_ = 0;
        for (auto &s : all_subspaces(field, std::nullopt, limits)) {
            index_[s] = subspaces_.size();
            std::vector<uint64_t> bits(words_, 0);
            for (const auto &v : s.elements()) {
                uint64_t code = v.pack(field.q);
                bits[code / 64] |= uint64_t{1} << (code % 64);
            }
            members_.push_back(std::move(bits));
            dims_.push_back(static_cast<uint32_t>(s.dim()));
            if (s.is_zero()) {
                zero_index_ = subspaces_.size();
            }
            subspaces_.push_back(std::move(s));
        }
        sums_.assign(subspaces_.size() * subspaces_.size(), -1);
    }

    size_t size() const {
        return subspaces_.size();
    }
    const Subspace &at(size_t i) const {
        return subspaces_[i];
    }
    uint32_t dim(size_t i) const {
        return dims_[i];
    }
    size_t zero_index() const {
        return zero_index_;
    }

    /// Only the zero vector in common.
    bool disjoint(size_t a, size_t b) const {
        const auto &x = members_[a];
        const auto &y = members_[b];
        for (size_t w = 0; w < words_; w++) {
            uint64_t common = x[w] & y[w];
            if (w == 0) {
                common &= ~uint64_t{1};
            }
            if (common) {
                return false;
            }
        }
        return true;
    }

    bool has_member(size_t s, uint64_t code) const {
        return (members_[s][code / 64] >> (code % 64)) & 1;
    }

    size_t sum_index(size_t a, size_t b) {
        int64_t &slot = sums_[a * subspaces_.size() + b];
        if (slot < 0) {
            slot = static_cast<int64_t>(index_.at(sum(subspaces_[a], subspaces_[b])));
        }
        return static_cast<size_t>(slot);
    }

   private:
    FieldParam field_;
    size_t words_ = 0;
    size_t zero_index_ = 0;
    std::vector<Subspace> subspaces_;
    std::vector<std::vector<uint64_t>> members_;
    std::vector<uint32_t> dims_;
    std::map<Subspace, size_t> index_;
    std::vector<int64_t> sums_;
};

/// Depth-first choice of blocks with strictly increasing catalog index, each
/// disjoint from the running sum; no post-hoc deduplication is needed.
class DsdWalker {
   public:
    DsdWalker(SubspaceCatalog &catalog, const FieldParam &field, const DsdQuery &query,
              const std::function<bool(const std::vector<size_t> &)> &emit)
        : catalog_(catalog), field_(field), query_(query), emit_(emit) {
        if (query.anchor.has_value()) {
            anchor_code_ = query.anchor->pack(field.q);
        }
    }

    void run() {
        std::vector<size_t> chosen;
        if (field_.n == 0) {
            if (!query_.anchor.has_value() && (!query_.blocks.has_value() || *query_.blocks == 0)) {
                emit_(chosen);
            }
            return;
        }
        walk(chosen, catalog_.zero_index(), 0, 0, false);
    }

   private:
    bool walk(std::vector<size_t> &chosen, size_t partial, uint32_t partial_dim, size_t next, bool anchored) {
        const uint32_t remaining_blocks_cap =
            query_.blocks.has_value() ? *query_.blocks - static_cast<uint32_t>(chosen.size()) : UINT32_MAX;
        if (remaining_blocks_cap == 0) {
            return true;
        }
        for (size_t i = next; i < catalog_.size(); i++) {
            const uint32_t d = catalog_.dim(i);
            if (d == 0 || partial_dim + d > field_.n) {
                continue;
            }
            const uint32_t left = field_.n - partial_dim - d;
            // Each further block has dim >= 1.
            if (query_.blocks.has_value()) {
                const uint32_t blocks_after = remaining_blocks_cap - 1;
                if (blocks_after > left || (blocks_after == 0 && left != 0)) {
                    continue;
                }
            }
            if (!catalog_.disjoint(partial, i)) {
                continue;
            }
            const bool now_anchored = anchored || (anchor_code_.has_value() && catalog_.has_member(i, *anchor_code_));
            chosen.push_back(i);
            bool keep_going = true;
            if (left == 0) {
                if (!anchor_code_.has_value() || now_anchored) {
                    keep_going = emit_(chosen);
                }
            } else {
                keep_going = walk(chosen, catalog_.sum_index(partial, i), partial_dim + d, i + 1, now_anchored);
            }
            chosen.pop_back();
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    SubspaceCatalog &catalog_;
    FieldParam field_;
    const DsdQuery &query_;
    const std::function<bool(const std::vector<size_t> &)> &emit_;
    std::optional<uint64_t> anchor_code_;
};

void check_query(const FieldParam &field, const DsdQuery &query) {
    if (query.anchor.has_value()) {
        check_vector(*query.anchor, field);
        if (query.anchor->is_zero()) {
            throw DsdError(ErrorCode::InvalidArgument, "the anchor vector must be nonzero");
        }
    }
}

}  // namespace

void for_each_dsd(const FieldParam &field, const DsdQuery &query, const std::function<bool(const Dsd &)> &visit,
                  const Limits &limits) {
    limits.check(field, "DSD enumeration");
    check_query(field, query);
    SubspaceCatalog catalog(field, limits);
    std::function<bool(const std::vector<size_t> &)> emit = [&](const std::vector<size_t> &chosen) {
        std::vector<Subspace> blocks;
        blocks.reserve(chosen.size());
        for (size_t i : chosen) {
            blocks.push_back(catalog.at(i));
        }
        return visit(Dsd::validate(std::move(blocks), field));
    };
    DsdWalker(catalog, field, query, emit).run();
}

std::vector<Dsd> enumerate_dsds(const FieldParam &field, const DsdQuery &query, const Limits &limits) {
    std::vector<Dsd> out;
    for_each_dsd(
        field, query,
        [&](const Dsd &d) {
            out.push_back(d);
            return true;
        },
        limits);
    return out;
}

uint64_t count_dsds(const FieldParam &field, const DsdQuery &query, const Limits &limits) {
    limits.check(field, "DSD enumeration");
    check_query(field, query);
    SubspaceCatalog catalog(field, limits);
    uint64_t count = 0;
    std::function<bool(const std::vector<size_t> &)> emit = [&](const std::vector<size_t> &) {
        count++;
        return true;
    };
    DsdWalker(catalog, field, query, emit).run();
    return count;
}

MaximalAbove maximal_above(const Dsd &atom, const Limits &limits) {
    if (atom.size() != 2) {
        throw DsdError(ErrorCode::NotAnAtom, atom.str() + " does not have exactly two blocks");
    }
    const FieldParam &field = atom.field();
    MaximalAbove out;
    out.count = maximal_above_count(field.q, static_cast<uint32_t>(atom.blocks()[0].dim()), field.n);
    if (limits.allows(field)) {
        std::vector<Dsd> list;
        for_each_dsd(
            field, DsdQuery{field.n, std::nullopt},
            [&](const Dsd &omega) {
                if (refines(atom, omega)) {
                    list.push_back(omega);
                }
                return true;
            },
            limits);
        out.list = std::move(list);
    }
    return out;
}

}  // namespace dsdlab
