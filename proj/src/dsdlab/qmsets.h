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

#ifndef DSDLAB_QMSETS_H
#define DSDLAB_QMSETS_H

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsdlab/dsd.h"
#include "dsdlab/numeric.h"
#include "dsdlab/partition_logic.h"

namespace dsdlab {

/// Labeled outcome set U = {u_1, ..., u_n}, identified with the standard
/// basis of GF(2)^n. Copies share the label storage.
class SampleSpace {
   public:
    /// Throws InvalidArgument for duplicate or empty labels, n = 0 or n > 64.
    explicit SampleSpace(std::vector<std::string> labels);

    size_t size() const {
        return labels_->size();
    }
    const std::vector<std::string> &labels() const {
        return *labels_;
    }
    const std::string &label(size_t i) const {
        return (*labels_)[i];
    }
    size_t index_of(const std::string &label) const;

    bool operator==(const SampleSpace &other) const {
        return labels_ == other.labels_ || *labels_ == *other.labels_;
    }

   private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A subset of the sample space, i.e. a GF(2) vector in the space's basis.
class Ket {
   public:
    Ket(SampleSpace space, uint64_t members);
    static Ket from_labels(const SampleSpace &space, const std::vector<std::string> &labels);
    static Ket empty(const SampleSpace &space) {
        return Ket(space, 0);
    }
    static Ket all(const SampleSpace &space);

    const SampleSpace &space() const {
        return space_;
    }
    uint64_t members() const {
        return members_;
    }
    size_t size() const;
    bool is_empty() const {
        return members_ == 0;
    }
    bool contains(size_t i) const {
        return (members_ >> i) & 1;
    }
    std::vector<std::string> labels() const;
    std::string str() const;

    bool operator==(const Ket &other) const {
        return space_ == other.space_ && members_ == other.members_;
    }

   private:
    SampleSpace space_;
    uint64_t members_;
};

Ket intersection(const Ket &a, const Ket &b);
/// Symmetric difference: vector addition over GF(2).
Ket add(const Ket &a, const Ket &b);

/// <T|_U S> = |T ∩ S|. Throws BasisMismatch across sample spaces.
size_t bracket(const Ket &t, const Ket &s);

/// ||S||_U^2 = |S|.
size_t norm_squared(const Ket &s);

/// Change of basis between equicardinal sample spaces. Row i of the matrix is
/// the i-th target basis ket written as a subset of source labels.
class BasisMap {
   public:
    /// Throws SingularMap unless the rows are independent over GF(2).
    BasisMap(SampleSpace source, SampleSpace target, std::vector<uint64_t> target_in_source);

    const SampleSpace &source() const {
        return source_;
    }
    const SampleSpace &target() const {
        return target_;
    }
    const std::vector<uint64_t> &rows() const {
        return rows_;
    }

    BasisMap inverse() const;

   private:
    SampleSpace source_;
    SampleSpace target_;
    std::vector<uint64_t> rows_;
    // Each source basis vector written in target coordinates.
    std::vector<uint64_t> inverse_rows_;

    friend Ket change_basis(const Ket &s, const BasisMap &map);
};

/// The same abstract vector re-expressed in the map's target basis.
Ket change_basis(const Ket &s, const BasisMap &map);

/// Real-valued (here: exact rational) function on the sample space.
class Attribute {
   public:
    Attribute(SampleSpace space, std::vector<Rational> values);
    /// Characteristic function χ_S.
    static Attribute characteristic(const Ket &s);

    const SampleSpace &space() const {
        return space_;
    }
    const std::vector<Rational> &values() const {
        return values_;
    }
    const Rational &value(size_t i) const {
        return values_[i];
    }

    /// Distinct values, ascending.
    std::vector<Rational> spectrum() const;
    /// f^{-1}(r); empty when r is not attained.
    Ket preimage(const Rational &r) const;
    /// {f^{-1}(r)} as a partition of label indices.
    SetPartition inverse_image_partition() const;

   private:
    SampleSpace space_;
    std::vector<Rational> values_;
};

/// The value of f when f is constant on S; empty otherwise. Throws EmptyState
/// for S = ∅.
std::optional<Rational> eigen_check(const Attribute &f, const Ket &s);

/// Eigenspace decomposition {℘(f^{-1}(r))} as a DSD of GF(2)^n.
Dsd attribute_dsd(const Attribute &f);

struct SpectralTerm {
    Rational eigenvalue;
    Attribute characteristic;
};

/// f = sum over the spectrum of r · χ_{f^{-1}(r)}, ascending in r.
std::vector<SpectralTerm> spectral_decomposition(const Attribute &f);

/// Pr(r | S) = |f^{-1}(r) ∩ S| / |S| for each r hit by S. Sums to exactly 1.
/// Throws EmptyState.
std::map<Rational, Rational> born(const Attribute &f, const Ket &s);

/// f^{-1}(r) ∩ S.
Ket project(const Attribute &f, const Rational &r, const Ket &s);

}  // namespace dsdlab

#endif
