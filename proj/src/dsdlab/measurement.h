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

#ifndef DSDLAB_MEASUREMENT_H
#define DSDLAB_MEASUREMENT_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsdlab/numeric.h"
#include "dsdlab/qmsets.h"

namespace dsdlab {

/// splitmix64 stream; position() counts the draws taken so far.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed) : seed_(seed), state_(seed) {
    }
    uint64_t next();
    uint64_t seed() const {
        return seed_;
    }
    uint64_t position() const {
        return position_;
    }

   private:
    uint64_t seed_;
    uint64_t state_;
    uint64_t position_ = 0;
};

struct MeasurementRecord {
    std::string attribute_id;
    Rational eigenvalue;
    Ket pre_state;
    Ket post_state;
    Rational probability;
    uint64_t seed = 0;
    /// Stream position of the draw that picked the outcome, or the position
    /// at which a forced outcome was applied (forced steps draw nothing).
    uint64_t draw_index = 0;
    bool forced = false;
};

/// Index in [0, bound) from one 64-bit draw: floor(draw * bound / 2^64).
uint64_t scale_draw(uint64_t draw, uint64_t bound);

/// Samples r from born(f, s): one draw t = scale_draw(x, |S|) and the first r
/// in ascending order whose cumulative count |f^{-1}(r') ∩ S| exceeds t.
/// Throws EmptyState.
MeasurementRecord measure(const Ket &s, const Attribute &f, SplitMix64 &rng, const std::string &attribute_id = "");

/// Applies a chosen outcome without drawing. Throws ZeroProbability when r
/// cannot occur from s and EmptyState for s = ∅.
MeasurementRecord measure_forced(const Ket &s, const Attribute &f, const Rational &r, const SplitMix64 &rng,
                                 const std::string &attribute_id = "");

/// One measurement step as scripted or replayed.
struct MeasurementStep {
    std::string attribute_id;
    Attribute attribute;
    std::optional<Rational> forced_outcome;
};

/// State plus RNG stream plus history. Single writer.
class MeasurementSession {
   public:
    MeasurementSession(SampleSpace space, uint64_t seed);
    MeasurementSession(Ket initial_state, uint64_t seed);

    const SampleSpace &space() const {
        return initial_.space();
    }
    const Ket &initial_state() const {
        return initial_;
    }
    const Ket &state() const {
        return state_;
    }
    uint64_t seed() const {
        return rng_.seed();
    }
    uint64_t stream_position() const {
        return rng_.position();
    }
    const std::vector<MeasurementRecord> &history() const {
        return history_;
    }
    const std::vector<MeasurementStep> &steps() const {
        return steps_;
    }

    const MeasurementRecord &apply(const MeasurementStep &step);
    void reset();

   private:
    Ket initial_;
    Ket state_;
    SplitMix64 rng_;
    std::vector<MeasurementStep> steps_;
    std::vector<MeasurementRecord> history_;
};

}  // namespace dsdlab

#endif
