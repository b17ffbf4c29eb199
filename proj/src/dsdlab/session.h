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

#ifndef DSDLAB_SESSION_H
#define DSDLAB_SESSION_H

#include <map>
#include <optional>
#include <string>

#include "dsdlab/json_io.h"
#include "dsdlab/measurement.h"

namespace dsdlab {

/// A measurement session with named attributes and a JSON transcript.
///
/// Transcript layout:
///   {"space":[...], "seed":N, "initial_state":[...],
///    "attributes":{id:{label:value}}, "steps":[{"attribute":id,"forced_outcome":r|null}],
///    "records":[...], "final_state":[...]}
/// The first five fields are a script: feeding a transcript back through
/// from_script replays it, and transcript() of the replay is byte-identical.
class Session {
   public:
    Session(Ket initial_state, uint64_t seed);

    /// Parses a script (or transcript) and applies its steps. Steps may name an
    /// entry of "attributes" or carry an inline values object; a bare string
    /// step is shorthand for {"attribute": id}.
    static Session from_script(const Json &script);

    const MeasurementSession &core() const {
        return session_;
    }
    const Ket &state() const {
        return session_.state();
    }

    /// Registers f under id (or under attribute_key(f) when id is empty) and
    /// measures it. Reusing an id for different values is an InvalidArgument.
    const MeasurementRecord &measure(const Attribute &f, const std::string &id = "",
                                     const std::optional<Rational> &forced = std::nullopt);
    /// Measures a previously registered attribute.
    const MeasurementRecord &measure(const std::string &id, const std::optional<Rational> &forced = std::nullopt);

    /// Restores the initial state, rewinds the stream and clears history. The
    /// attribute registry is kept.
    void reset();

    /// Adds an attribute without measuring it.
    std::string define(const Attribute &f, const std::string &id = "");
    const std::map<std::string, Attribute> &attributes() const {
        return attributes_;
    }

    Json transcript() const;

   private:
    MeasurementSession session_;
    std::map<std::string, Attribute> attributes_;
};

}  // namespace dsdlab

#endif
