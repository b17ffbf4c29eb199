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

#include "dsdlab/qmsets.h"

#include <algorithm>
#include <bit>
#include <set>

#include "dsdlab/error.h"

namespace dsdlab {

namespace {

void check_same_space(const SampleSpace &a, const SampleSpace &b) {
    if (!(a == b)) {
        throw DsdError(ErrorCode::BasisMismatch, "kets are expressed in different sample spaces");
    }
}

uint64_t full_mask(size_t n) {
    return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

}  // namespace

SampleSpace::SampleSpace(std::vector<std::string> labels) {
    if (labels.empty() || labels.size() > 64) {
        throw DsdError(ErrorCode::InvalidArgument, "a sample space needs 1 to 64 labels");
    }
    std::set<std::string> seen;
    for (const auto &l : labels) {
        if (l.empty()) {
            throw DsdError(ErrorCode::InvalidArgument, "empty outcome label");
        }
        if (!seen.insert(l).second) {
            throw DsdError(ErrorCode::InvalidArgument, "duplicate outcome label '" + l + "'");
        }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

size_t SampleSpace::index_of(const std::string &label) const {
    auto it = std::find(labels_->begin(), labels_->end(), label);
    if (it == labels_->end()) {
        throw DsdError(ErrorCode::InvalidArgument, "unknown outcome label '" + label + "'");
    }
    return static_cast<size_t>(it - labels_->begin());
}

Ket::Ket(SampleSpace space, uint64_t members) : space_(std::move(space)), members_(members) {
    if ((members_ & ~full_mask(space_.size())) != 0) {
        throw DsdError(ErrorCode::DimensionMismatch, "ket members outside the sample space");
    }
}

Ket Ket::from_labels(const SampleSpace &space, const std::vector<std::string> &labels) {
    uint64_t mask = 0;
    for (const auto &l : labels) {
        mask |= uint64_t{1} << space.index_of(l);
    }
    return Ket(space, mask);
}

Ket Ket::all(const SampleSpace &space) {
    return Ket(space, full_mask(space.size()));
}

size_t Ket::size() const {
    return static_cast<size_t>(std::popcount(members_));
}

std::vector<std::string> Ket::labels() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < space_.size(); i++) {
        if (contains(i)) {
            out.push_back(space_.label(i));
        }
    }
    return out;
}

std::string Ket::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto &l : labels()) {
        out += (first ? "" : ",") + l;
        first = false;
    }
    return out + "}";
}

Ket intersection(const Ket &a, const Ket &b) {
    check_same_space(a.space(), b.space());
    return Ket(a.space(), a.members() & b.members());
}

Ket add(const Ket &a, const Ket &b) {
    check_same_space(a.space(), b.space());
    return Ket(a.space(), a.members() ^ b.members());
}

size_t bracket(const Ket &t, const Ket &s) {
    return intersection(t, s).size();
}

size_t norm_squared(const Ket &s) {
    return s.size();
}

BasisMap::BasisMap(SampleSpace source, SampleSpace target, std::vector<uint64_t> target_in_source)
    : source_(std::move(source)), target_(std::move(target)), rows_(std::move(target_in_source)) {
    const size_t n = source_.size();
    if (target_.size() != n || rows_.size() != n) {
        throw DsdError(ErrorCode::DimensionMismatch, "basis change needs equicardinal sample spaces");
    }
    // Gauss-Jordan on [rows | I]: afterwards the right half expresses each
    // source basis vector in target coordinates.
    std::vector<uint64_t> left = rows_;
    std::vector<uint64_t> right(n);
    for (size_t i = 0; i < n; i++) {
        if ((left[i] & ~full_mask(n)) != 0) {
            throw DsdError(ErrorCode::DimensionMismatch, "basis row outside the source space");
        }
        right[i] = uint64_t{1} << i;
    }
    for (size_t col = 0; col < n; col++) {
        const uint64_t bit = uint64_t{1} << col;
        size_t found = col;
        while (found < n && !(left[found] & bit)) {
            found++;
        }
        if (found == n) {
            throw DsdError(ErrorCode::SingularMap, "basis change matrix is singular over GF(2)");
        }
        std::swap(left[col], left[found]);
        std::swap(right[col], right[found]);
        for (size_t r = 0; r < n; r++) {
            if (r != col && (left[r] & bit)) {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    inverse_rows_ = std::move(right);
}

BasisMap BasisMap::inverse() const {
    return BasisMap(target_, source_, inverse_rows_);
}

Ket change_basis(const Ket &s, const BasisMap &map) {
    check_same_space(s.space(), map.source());
    uint64_t out = 0;
    for (size_t j = 0; j < map.source().size(); j++) {
        if (s.contains(j)) {
            out ^= map.inverse_rows_[j];
        }
    }
    return Ket(map.target(), out);
}

Attribute::Attribute(SampleSpace space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size()) {
        throw DsdError(ErrorCode::DimensionMismatch, "attribute must give a value for every outcome");
    }
}

Attribute Attribute::characteristic(const Ket &s) {
    std::vector<Rational> values(s.space().size());
    for (size_t i = 0; i < values.size(); i++) {
        values[i] = s.contains(i) ? 1 : 0;
    }
    return Attribute(s.space(), std::move(values));
}

std::vector<Rational> Attribute::spectrum() const {
    std::vector<Rational> out = values_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Ket Attribute::preimage(const Rational &r) const {
    uint64_t mask = 0;
    for (size_t i = 0; i < values_.size(); i++) {
        if (values_[i] == r) {
            mask |= uint64_t{1} << i;
        }
    }
    return Ket(space_, mask);
}

SetPartition Attribute::inverse_image_partition() const {
    std::vector<std::vector<size_t>> blocks;
    for (const auto &r : spectrum()) {
        std::vector<size_t> block;
        for (size_t i = 0; i < values_.size(); i++) {
            if (values_[i] == r) {
                block.push_back(i);
            }
        }
        blocks.push_back(std::move(block));
    }
    return SetPartition::make(std::move(blocks), values_.size());
}

std::optional<Rational> eigen_check(const Attribute &f, const Ket &s) {
    check_same_space(f.space(), s.space());
    if (s.is_empty()) {
        throw DsdError(ErrorCode::EmptyState, "the empty ket has no eigenvalue");
    }
    std::optional<Rational> value;
    for (size_t i = 0; i < s.space().size(); i++) {
        if (!s.contains(i)) {
            continue;
        }
        if (!value.has_value()) {
            value = f.value(i);
        } else if (*value != f.value(i)) {
            return std::nullopt;
        }
    }
    return value;
}

Dsd attribute_dsd(const Attribute &f) {
    const FieldParam field{2, static_cast<uint32_t>(f.space().size())};
    const SetPartition partition = f.inverse_image_partition();
    std::vector<Subspace> blocks;
    for (const auto &block : partition.blocks()) {
        std::vector<Vector> axes;
        for (size_t i : block) {
            Vector e = Vector::zero(field.n);
            e[i] = 1;
            axes.push_back(std::move(e));
        }
        blocks.push_back(canonicalize(axes, field));
    }
    return Dsd::validate(std::move(blocks), field);
}

std::vector<SpectralTerm> spectral_decomposition(const Attribute &f) {
    std::vector<SpectralTerm> out;
    for (const auto &r : f.spectrum()) {
        out.push_back(SpectralTerm{r, Attribute::characteristic(f.preimage(r))});
    }
    return out;
}

std::map<Rational, Rational> born(const Attribute &f, const Ket &s) {
    check_same_space(f.space(), s.space());
    if (s.is_empty()) {
        throw DsdError(ErrorCode::EmptyState, "Born probabilities need a nonempty state");
    }
    std::map<Rational, Rational> out;
    const auto total = static_cast<int64_t>(s.size());
    for (const auto &r : f.spectrum()) {
        const auto hit = static_cast<int64_t>(intersection(f.preimage(r), s).size());
        if (hit > 0) {
            out.emplace(r, Rational(hit, total));
        }
    }
    return out;
}

Ket project(const Attribute &f, const Rational &r, const Ket &s) {
    return intersection(f.preimage(r), s);
}

}  // namespace dsdlab
