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

#include "dsdlab/density.h"

#include "dsdlab/error.h"

namespace dsdlab {

namespace {

void check_shape(const SampleSpace &a, const SampleSpace &b) {
    if (!(a == b)) {
        throw DsdError(ErrorCode::ShapeMismatch, "matrices over different sample spaces");
    }
}

}  // namespace

RationalMatrix::RationalMatrix(SampleSpace space)
    : space_(std::move(space)), n_(space_.size()), entries_(n_ * n_, Rational(0)) {
}

RationalMatrix RationalMatrix::projector(const Ket &b) {
    RationalMatrix p(b.space());
    for (size_t j = 0; j < p.n_; j++) {
        if (b.contains(j)) {
            p.at(j, j) = 1;
        }
    }
    return p;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (size_t j = 0; j < n_; j++) {
        t += at(j, j);
    }
    return t;
}

bool RationalMatrix::is_symmetric() const {
    for (size_t r = 0; r < n_; r++) {
        for (size_t c = r + 1; c < n_; c++) {
            if (at(r, c) != at(c, r)) {
                return false;
            }
        }
    }
    return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix &other) const {
    check_shape(space_, other.space_);
    RationalMatrix out(space_);
    for (size_t r = 0; r < n_; r++) {
        for (size_t k = 0; k < n_; k++) {
            const Rational &x = at(r, k);
            if (x == 0) {
                continue;
            }
            for (size_t c = 0; c < n_; c++) {
                out.at(r, c) += x * other.at(k, c);
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix &other) const {
    check_shape(space_, other.space_);
    RationalMatrix out(space_);
    for (size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] = entries_[i] + other.entries_[i];
    }
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rational &factor) const {
    RationalMatrix out(space_);
    for (size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] = entries_[i] * factor;
    }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix &other) const {
    return space_ == other.space_ && entries_ == other.entries_;
}

DensityMatrix DensityMatrix::from_matrix(RationalMatrix m) {
    if (!m.is_symmetric()) {
        throw DsdError(ErrorCode::InvalidArgument, "density matrix must be symmetric");
    }
    if (m.trace() != 1) {
        throw DsdError(ErrorCode::InvalidArgument, "density matrix must have trace 1");
    }
    for (size_t r = 0; r < m.size(); r++) {
        for (size_t c = 0; c < m.size(); c++) {
            if (m.at(r, c) < 0) {
                throw DsdError(ErrorCode::InvalidArgument, "density matrix entries must be nonnegative");
            }
        }
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix rho_of_set(const Ket &s) {
    if (s.is_empty()) {
        throw DsdError(ErrorCode::EmptyBlock, "density matrix of the empty set");
    }
    RationalMatrix m(s.space());
    const Rational weight(1, static_cast<int64_t>(s.size()));
    for (size_t r = 0; r < m.size(); r++) {
        for (size_t c = 0; c < m.size(); c++) {
            if (s.contains(r) && s.contains(c)) {
                m.at(r, c) = weight;
            }
        }
    }
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix rho_of_partition(const SampleSpace &space, const SetPartition &partition) {
    if (partition.universe_size() != space.size()) {
        throw DsdError(ErrorCode::ShapeMismatch, "partition universe differs from the sample space");
    }
    RationalMatrix total(space);
    const auto n = static_cast<int64_t>(space.size());
    for (const auto &block : partition.blocks()) {
        uint64_t mask = 0;
        for (size_t i : block) {
            mask |= uint64_t{1} << i;
        }
        Ket b(space, mask);
        total = total + rho_of_set(b).matrix().scaled(Rational(static_cast<int64_t>(b.size()), n));
    }
    return DensityMatrix::from_matrix(std::move(total));
}

Rational prob_trace(const Ket &b, const DensityMatrix &rho) {
    check_shape(b.space(), rho.space());
    // P_B is diagonal, so tr[P_B ρ] only sees ρ's diagonal on B.
    Rational t = 0;
    for (size_t j = 0; j < rho.size(); j++) {
        if (b.contains(j)) {
            t += rho.at(j, j);
        }
    }
    return t;
}

RationalMatrix conjugate(const Ket &b, const DensityMatrix &rho) {
    check_shape(b.space(), rho.space());
    const RationalMatrix p = RationalMatrix::projector(b);
    return p * rho.matrix() * p;
}

DensityMatrix luders_update(const DensityMatrix &rho, const Attribute &f) {
    check_shape(f.space(), rho.space());
    RationalMatrix total(rho.space());
    for (const auto &r : f.spectrum()) {
        total = total + conjugate(f.preimage(r), rho);
    }
    return DensityMatrix::from_matrix(std::move(total));
}

std::vector<ConditionedState> conditioned_states(const DensityMatrix &rho, const Attribute &f) {
    check_shape(f.space(), rho.space());
    std::vector<ConditionedState> out;
    for (const auto &r : f.spectrum()) {
        const Ket block = f.preimage(r);
        const Rational p = prob_trace(block, rho);
        if (p == 0) {
            continue;
        }
        out.push_back(ConditionedState{r, p, DensityMatrix::from_matrix(conjugate(block, rho).scaled(1 / p))});
    }
    return out;
}

}  // namespace dsdlab
