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

#ifndef DSDLAB_DENSITY_H
#define DSDLAB_DENSITY_H

#include <vector>

#include "dsdlab/numeric.h"
#include "dsdlab/partition_logic.h"
#include "dsdlab/qmsets.h"

namespace dsdlab {

/// Square matrix of exact rationals over a sample space.
class RationalMatrix {
   public:
    RationalMatrix(SampleSpace space);

    /// Diagonal projector P_B with (P_B)_jj = χ_B(u_j).
    static RationalMatrix projector(const Ket &b);

    const SampleSpace &space() const {
        return space_;
    }
    size_t size() const {
        return n_;
    }
    const Rational &at(size_t row, size_t col) const {
        return entries_[row * n_ + col];
    }
    Rational &at(size_t row, size_t col) {
        return entries_[row * n_ + col];
    }
    Rational trace() const;
    bool is_symmetric() const;

    RationalMatrix operator*(const RationalMatrix &other) const;
    RationalMatrix operator+(const RationalMatrix &other) const;
    RationalMatrix scaled(const Rational &factor) const;

    bool operator==(const RationalMatrix &other) const;

   private:
    SampleSpace space_;
    size_t n_;
    std::vector<Rational> entries_;
};

/// Density matrix: symmetric, nonnegative entries, trace 1.
class DensityMatrix {
   public:
    const RationalMatrix &matrix() const {
        return matrix_;
    }
    const SampleSpace &space() const {
        return matrix_.space();
    }
    const Rational &at(size_t row, size_t col) const {
        return matrix_.at(row, col);
    }
    size_t size() const {
        return matrix_.size();
    }

    bool operator==(const DensityMatrix &other) const {
        return matrix_ == other.matrix_;
    }

    /// Checks the invariants; throws InvalidArgument when they fail.
    static DensityMatrix from_matrix(RationalMatrix m);

   private:
    explicit DensityMatrix(RationalMatrix m) : matrix_(std::move(m)) {
    }
    RationalMatrix matrix_;
};

/// ρ(S) = |S⟩₁⟨S|₁ with |S⟩₁ = χ_S / sqrt|S|: entries 1/|S| on S × S.
/// Throws EmptyBlock for S = ∅.
DensityMatrix rho_of_set(const Ket &s);

/// ρ(π) = Σ_B (|B|/|U|) ρ(B).
DensityMatrix rho_of_partition(const SampleSpace &space, const SetPartition &partition);

/// tr[P_B ρ]. Throws ShapeMismatch when the spaces differ.
Rational prob_trace(const Ket &b, const DensityMatrix &rho);

/// P ρ P.
RationalMatrix conjugate(const Ket &b, const DensityMatrix &rho);

/// Σ_r P_{f^{-1}(r)} ρ P_{f^{-1}(r)}.
DensityMatrix luders_update(const DensityMatrix &rho, const Attribute &f);

struct ConditionedState {
    Rational eigenvalue;
    Rational probability;
    DensityMatrix state;
};

/// P ρ P / tr[P ρ] for each eigenvalue with nonzero probability, ascending.
std::vector<ConditionedState> conditioned_states(const DensityMatrix &rho, const Attribute &f);

}  // namespace dsdlab

#endif
