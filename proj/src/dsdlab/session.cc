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

#include "dsdlab/session.h"

#include "dsdlab/error.h"

namespace dsdlab {

namespace {

uint64_t seed_from_json(const Json &j) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<int64_t>() >= 0)) {
        return j.get<uint64_t>();
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        size_t used = 0;
        try {
            uint64_t v = std::stoull(s, &used, 10);
            if (used == s.size() && !s.empty() && s[0] != '-') {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    throw DsdError(ErrorCode::Parse, "seed must be an unsigned 64-bit integer, got " + j.dump());
}

bool same_values(const Attribute &a, const Attribute &b) {
    return a.space() == b.space() && a.values() == b.values();
}

}  // namespace

Session::Session(Ket initial_state, uint64_t seed) : session_(std::move(initial_state), seed) {
}

Session Session::from_script(const Json &script) {
    if (!script.is_object() || !script.contains("space")) {
        throw DsdError(ErrorCode::Parse, "script needs a \"space\" field");
    }
    const SampleSpace space = space_from_json(script.at("space"));
    const uint64_t seed = script.contains("seed") ? seed_from_json(script.at("seed")) : 0;
    Ket initial = script.contains("initial_state") ? ket_from_json(script.at("initial_state"), space)
                                                   : Ket::all(space);
    Session session(std::move(initial), seed);

    if (script.contains("attributes")) {
        const Json &attrs = script.at("attributes");
        if (!attrs.is_object()) {
            throw DsdError(ErrorCode::Parse, "\"attributes\" must map ids to value objects");
        }
        for (const auto &[id, values] : attrs.items()) {
            session.define(attribute_from_json(values, space), id);
        }
    }
    if (script.contains("steps")) {
        const Json &steps = script.at("steps");
        if (!steps.is_array()) {
            throw DsdError(ErrorCode::Parse, "\"steps\" must be an array");
        }
        for (const auto &step : steps) {
            if (step.is_string()) {
                session.measure(step.get<std::string>());
                continue;
            }
            if (!step.is_object() || !step.contains("attribute")) {
                throw DsdError(ErrorCode::Parse, "each step needs an \"attribute\"");
            }
            std::optional<Rational> forced;
            if (step.contains("forced_outcome") && !step.at("forced_outcome").is_null()) {
                const Json &f = step.at("forced_outcome");
                forced = f.is_string() ? parse_rational(f.get<std::string>())
                                       : parse_rational(f.dump());
            }
            const Json &a = step.at("attribute");
            if (a.is_string()) {
                session.measure(a.get<std::string>(), forced);
            } else {
                const std::string id = step.contains("id") ? step.at("id").get<std::string>() : "";
                session.measure(attribute_from_json(a, space), id, forced);
            }
        }
    }
    return session;
}

std::string Session::define(const Attribute &f, const std::string &id) {
    if (!(f.space() == session_.space())) {
        throw DsdError(ErrorCode::BasisMismatch, "attribute uses a different sample space");
    }
    const std::string key = id.empty() ? attribute_key(f) : id;
    auto it = attributes_.find(key);
    if (it == attributes_.end()) {
        attributes_.emplace(key, f);
    } else if (!same_values(it->second, f)) {
        throw DsdError(ErrorCode::InvalidArgument, "attribute id '" + key + "' already names different values");
    }
    return key;
}

const MeasurementRecord &Session::measure(const Attribute &f, const std::string &id,
                                          const std::optional<Rational> &forced) {
    return measure(define(f, id), forced);
}

const MeasurementRecord &Session::measure(const std::string &id, const std::optional<Rational> &forced) {
    auto it = attributes_.find(id);
    if (it == attributes_.end()) {
        throw DsdError(ErrorCode::InvalidArgument, "unknown attribute '" + id + "'");
    }
    return session_.apply(MeasurementStep{id, it->second, forced});
}

void Session::reset() {
    session_.reset();
}

Json Session::transcript() const {
    Json attrs = Json::object();
    for (const auto &[id, f] : attributes_) {
        attrs[id] = values_json(f);
    }
    Json steps = Json::array();
    for (const auto &s : session_.steps()) {
        steps.push_back(Json{{"attribute", s.attribute_id},
                             {"forced_outcome", s.forced_outcome ? Json(format_rational(*s.forced_outcome)) : Json()}});
    }
    Json records = Json::array();
    for (const auto &r : session_.history()) {
        records.push_back(to_json(r));
    }
    return Json{{"space", to_json(session_.space())},
                {"seed", session_.seed()},
                {"initial_state", members_json(session_.initial_state())},
                {"attributes", attrs},
                {"steps", steps},
                {"records", records},
                {"final_state", members_json(session_.state())}};
}

}  // namespace dsdlab
