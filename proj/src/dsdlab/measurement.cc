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

#include "dsdlab/measurement.h"

#include "dsdlab/error.h"

namespace dsdlab {

uint64_t SplitMix64::next() {
    position_++;
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t scale_draw(uint64_t draw, uint64_t bound) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(draw) * bound) >> 64);
}

MeasurementRecord measure(const Ket &s, const Attribute &f, SplitMix64 &rng, const std::string &attribute_id) {
    if (s.is_empty()) {
        throw DsdError(ErrorCode::EmptyState, "cannot measure the empty state");
    }
    if (!(s.space() == f.space())) {
        throw DsdError(ErrorCode::BasisMismatch, "attribute and state use different sample spaces");
    }
    const uint64_t position = rng.position();
    const uint64_t target = scale_draw(rng.next(), s.size());
    uint64_t cumulative = 0;
    for (const auto &r : f.spectrum()) {
        const Ket post = project(f, r, s);
        cumulative += post.size();
        if (target < cumulative) {
            return MeasurementRecord{attribute_id,
                                     r,
                                     s,
                                     post,
                                     Rational(static_cast<int64_t>(post.size()), static_cast<int64_t>(s.size())),
                                     rng.seed(),
                                     position,
                                     false};
        }
    }
    throw DsdError(ErrorCode::InvalidArgument, "measurement draw fell outside the spectrum");
}

MeasurementRecord measure_forced(const Ket &s, const Attribute &f, const Rational &r, const SplitMix64 &rng,
                                 const std::string &attribute_id) {
    if (s.is_empty()) {
        throw DsdError(ErrorCode::EmptyState, "cannot measure the empty state");
    }
    if (!(s.space() == f.space())) {
        throw DsdError(ErrorCode::BasisMismatch, "attribute and state use different sample spaces");
    }
    const Ket post = project(f, r, s);
    if (post.is_empty()) {
        throw DsdError(ErrorCode::ZeroProbability,
                       "forced outcome " + format_rational(r) + " has probability 0 from " + s.str());
    }
    return MeasurementRecord{attribute_id,
                             r,
                             s,
                             post,
                             Rational(static_cast<int64_t>(post.size()), static_cast<int64_t>(s.size())),
                             rng.seed(),
                             rng.position(),
                             true};
}

MeasurementSession::MeasurementSession(SampleSpace space, uint64_t seed)
    : MeasurementSession(Ket::all(space), seed) {
}

MeasurementSession::MeasurementSession(Ket initial_state, uint64_t seed)
    : initial_(initial_state), state_(std::move(initial_state)), rng_(seed) {
}

const MeasurementRecord &MeasurementSession::apply(const MeasurementStep &step) {
    MeasurementRecord record =
        step.forced_outcome.has_value()
            ? measure_forced(state_, step.attribute, *step.forced_outcome, rng_, step.attribute_id)
            : measure(state_, step.attribute, rng_, step.attribute_id);
    state_ = record.post_state;
    steps_.push_back(step);
    history_.push_back(std::move(record));
    return history_.back();
}

void MeasurementSession::reset() {
    state_ = initial_;
    rng_ = SplitMix64(rng_.seed());
    steps_.clear();
    history_.clear();
}

}  // namespace dsdlab
