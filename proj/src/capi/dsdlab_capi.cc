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

#include "dsdlab/dsdlab.h"

#include <cstring>
#include <mutex>

#include "dsdlab/counting.h"
#include "dsdlab/density.h"
#include "dsdlab/dsd_enum.h"
#include "dsdlab/error.h"
#include "dsdlab/json_io.h"
#include "dsdlab/limits.h"
#include "dsdlab/partition_logic.h"
#include "dsdlab/session.h"
#include "dsdlab/tables.h"

using namespace dsdlab;

struct dsdlab_session {
    Session session;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_code;

std::mutex limits_mutex;

Limits &global_limits() {
    static Limits limits = Limits::from_environment();
    return limits;
}

Limits current_limits(bool force) {
    if (force) {
        return Limits::unbounded();
    }
    std::lock_guard<std::mutex> lock(limits_mutex);
    return global_limits();
}

dsdlab_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::CeilingExceeded:
            return DSDLAB_ERR_CEILING;
        case ErrorCode::Incompatible:
            return DSDLAB_ERR_INCOMPATIBLE;
        case ErrorCode::NotInLogic:
            return DSDLAB_ERR_NOT_IN_LOGIC;
        case ErrorCode::EmptyState:
            return DSDLAB_ERR_EMPTY_STATE;
        default:
            return DSDLAB_ERR_INVALID;
    }
}

dsdlab_status fail(dsdlab_status status, const char *code, const std::string &message) {
    last_error = message;
    last_error_code = code;
    return status;
}

// Runs body, converting exceptions into a status and the thread's last error.
template <typename F>
dsdlab_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        last_error_code.clear();
        return DSDLAB_OK;
    } catch (const DsdError &e) {
        return fail(status_of(e.code()), error_code_name(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(DSDLAB_ERR_INTERNAL, "OutOfMemory", "out of memory");
    } catch (const std::exception &e) {
        return fail(DSDLAB_ERR_INTERNAL, "Internal", e.what());
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void *p, const char *what) {
    if (p == nullptr) {
        throw DsdError(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
    }
}

DsdQuery make_query(uint32_t q, uint32_t n, int32_t m, const char *anchor_json) {
    DsdQuery query;
    if (m >= 0) {
        query.blocks = static_cast<uint32_t>(m);
    }
    if (anchor_json != nullptr && *anchor_json != '\0') {
        query.anchor = vector_from_json(parse_json(anchor_json), FieldParam::make(q, n));
    }
    return query;
}

Json bool_json(bool value) {
    return Json{{"result", value}};
}

Json dsd_list_json(const std::vector<Dsd> &list) {
    Json out = Json::array();
    for (const auto &d : list) {
        out.push_back(to_json(d));
    }
    return out;
}

Json session_json(const Session &s) {
    const MeasurementSession &core = s.core();
    Json attrs = Json::object();
    for (const auto &[id, f] : s.attributes()) {
        attrs[id] = values_json(f);
    }
    Json history = Json::array();
    for (const auto &r : core.history()) {
        history.push_back(to_json(r));
    }
    Json density = Json();
    if (!core.state().is_empty()) {
        density = matrix_json(rho_of_set(core.state()).matrix());
    }
    return Json{{"space", to_json(core.space())},
                {"seed", core.seed()},
                {"initial_state", members_json(core.initial_state())},
                {"state", members_json(core.state())},
                {"stream_position", core.stream_position()},
                {"attributes", attrs},
                {"history", history},
                {"density", density}};
}

}  // namespace

extern "C" {

const char *dsdlab_version(void) {
    return "1.0.0";
}

const char *dsdlab_last_error(void) {
    return last_error.c_str();
}

const char *dsdlab_last_error_code(void) {
    return last_error_code.c_str();
}

void dsdlab_free_string(char *s) {
    std::free(s);
}

dsdlab_status dsdlab_set_ceiling(uint32_t q, uint32_t n) {
    return guarded([&] {
        if (!is_prime(q)) {
            throw DsdError(ErrorCode::InvalidArgument, "q=" + std::to_string(q) + " is not prime");
        }
        if (n == 0) {
            throw DsdError(ErrorCode::InvalidArgument, "ceilings must be at least 1");
        }
        std::lock_guard<std::mutex> lock(limits_mutex);
        global_limits().set_ceiling(q, n);
    });
}

uint32_t dsdlab_get_ceiling(uint32_t q) {
    std::lock_guard<std::mutex> lock(limits_mutex);
    return global_limits().ceiling(q);
}

dsdlab_status dsdlab_count(uint32_t q, uint32_t n, int32_t m, int star, char **out) {
    return guarded([&] {
        require(out, "out");
        if (q == 0) {
            throw DsdError(ErrorCode::InvalidArgument, "q must be at least 1");
        }
        BigInt value;
        if (m < 0) {
            value = star ? dsd_total_star(q, n) : dsd_total(q, n);
        } else {
            value = star ? dsd_count_star(q, n, static_cast<uint32_t>(m)) : dsd_count(q, n, static_cast<uint32_t>(m));
        }
        *out = dup_string(format_bigint(value));
    });
}

dsdlab_status dsdlab_count_table(uint32_t q, uint32_t max_n, int star, const char *format, char **out) {
    return guarded([&] {
        require(out, "out");
        if (q == 0) {
            throw DsdError(ErrorCode::InvalidArgument, "q must be at least 1");
        }
        const TableFormat f = parse_table_format(format == nullptr ? "csv" : format);
        *out = dup_string(count_table(q, max_n, star != 0, f));
    });
}

dsdlab_status dsdlab_oeis(const char *id, uint32_t max_n, char **out) {
    return guarded([&] {
        require(id, "id");
        require(out, "out");
        *out = dup_string(oeis_line(id, max_n));
    });
}

dsdlab_status dsdlab_enum_visit(uint32_t q, uint32_t n, int32_t m, const char *anchor_json, int force,
                                dsdlab_dsd_visitor visit, void *user) {
    return guarded([&] {
        require(reinterpret_cast<const void *>(visit), "visit");
        const FieldParam field = FieldParam::make(q, n);
        for_each_dsd(
            field, make_query(q, n, m, anchor_json),
            [&](const Dsd &d) {
                const std::string line = to_json(d).dump();
                return visit(line.c_str(), user) != 0;
            },
            current_limits(force != 0));
    });
}

dsdlab_status dsdlab_enum_count(uint32_t q, uint32_t n, int32_t m, const char *anchor_json, int force,
                                uint64_t *out) {
    return guarded([&] {
        require(out, "out");
        const FieldParam field = FieldParam::make(q, n);
        *out = count_dsds(field, make_query(q, n, m, anchor_json), current_limits(force != 0));
    });
}

dsdlab_status dsdlab_lattice(const char *op, const char *a_json, const char *b_json, const char *omega_json,
                             char **out) {
    return guarded([&] {
        require(op, "op");
        require(a_json, "a_json");
        require(out, "out");
        const std::string name = op;
        const Dsd a = dsd_from_json(parse_json(a_json));
        Json result;
        if (name == "validate") {
            result = to_json(a);
        } else if (name == "atoms") {
            result = dsd_list_json(atoms_below(PartitionLogicContext(a)));
        } else if (name == "maximal_above") {
            const MaximalAbove above = maximal_above(a, current_limits(false));
            result = Json{{"count", format_bigint(above.count)}};
            if (above.list.has_value()) {
                result["list"] = dsd_list_json(*above.list);
            }
        } else {
            require(b_json, "b_json");
            const Dsd b = dsd_from_json(parse_json(b_json));
            if (name == "join") {
                result = to_json(join(a, b));
            } else if (name == "meet") {
                result = to_json(meet(a, b));
            } else if (name == "proto_join") {
                Json blocks = Json::array();
                for (const auto &s : proto_join(a, b)) {
                    blocks.push_back(to_json(s));
                }
                result = blocks;
            } else if (name == "compat") {
                result = bool_json(compatible(a, b));
            } else if (name == "refines") {
                result = bool_json(refines(a, b));
            } else if (name == "implies") {
                if (omega_json == nullptr) {
                    throw DsdError(ErrorCode::InvalidArgument, "implies needs omega");
                }
                const PartitionLogicContext ctx(dsd_from_json(parse_json(omega_json)));
                result = to_json(implication(a, b, ctx));
            } else {
                throw DsdError(ErrorCode::InvalidArgument, "unknown lattice operation '" + name + "'");
            }
        }
        *out = dup_string(result.dump());
    });
}

dsdlab_status dsdlab_born(const char *attribute_json, const char *ket_json, char **out) {
    return guarded([&] {
        require(attribute_json, "attribute_json");
        require(ket_json, "ket_json");
        require(out, "out");
        const Attribute f = attribute_from_json(parse_json(attribute_json));
        const Ket s = ket_from_json(parse_json(ket_json), f.space());
        *out = dup_string(born_json(born(f, s)).dump());
    });
}

dsdlab_status dsdlab_suggest_attributes(const char *space_json, char **out) {
    return guarded([&] {
        require(space_json, "space_json");
        require(out, "out");
        const Json parsed = parse_json(space_json);
        const SampleSpace space = space_from_json(parsed.is_object() ? parsed.at("space") : parsed);
        if (space.size() > 10) {
            throw DsdError(ErrorCode::CeilingExceeded, "attribute suggestions are limited to n <= 10");
        }
        Json list = Json::array();
        for (const auto &p : all_set_partitions(space.size())) {
            Json values = Json::object();
            for (size_t i = 0; i < space.size(); i++) {
                values[space.label(i)] = std::to_string(p.block_of(i));
            }
            list.push_back(Json{{"partition", partition_json(p, space)}, {"values", values}});
        }
        *out = dup_string(list.dump());
    });
}

dsdlab_status dsdlab_density(const char *request_json, char **out) {
    return guarded([&] {
        require(request_json, "request_json");
        require(out, "out");
        const Json req = parse_json(request_json);
        if (req.is_object() && req.contains("ket")) {
            *out = dup_string(to_json(rho_of_set(ket_from_json(req.at("ket")))).dump());
            return;
        }
        if (!req.is_object() || !req.contains("space") || !req.contains("partition")) {
            throw DsdError(ErrorCode::Parse, "density request needs \"ket\" or \"space\" and \"partition\"");
        }
        const SampleSpace space = space_from_json(req.at("space"));
        std::vector<std::vector<size_t>> blocks;
        for (const auto &block : req.at("partition")) {
            std::vector<size_t> indices;
            for (const auto &label : block) {
                indices.push_back(space.index_of(label.get<std::string>()));
            }
            blocks.push_back(std::move(indices));
        }
        const SetPartition p = SetPartition::make(std::move(blocks), space.size());
        *out = dup_string(to_json(rho_of_partition(space, p)).dump());
    });
}

dsdlab_status dsdlab_session_create(const char *space_json, uint64_t seed, const char *initial_state_json,
                                    dsdlab_session **out) {
    return guarded([&] {
        require(space_json, "space_json");
        require(out, "out");
        const SampleSpace space = space_from_json(parse_json(space_json));
        Ket initial = initial_state_json == nullptr || *initial_state_json == '\0'
                          ? Ket::all(space)
                          : ket_from_json(parse_json(initial_state_json), space);
        *out = new dsdlab_session{Session(std::move(initial), seed)};
    });
}

dsdlab_status dsdlab_session_from_script(const char *script_json, dsdlab_session **out) {
    return guarded([&] {
        require(script_json, "script_json");
        require(out, "out");
        *out = new dsdlab_session{Session::from_script(parse_json(script_json))};
    });
}

void dsdlab_session_destroy(dsdlab_session *session) {
    delete session;
}

dsdlab_status dsdlab_session_define(dsdlab_session *session, const char *id, const char *attribute_json,
                                    char **out_id) {
    return guarded([&] {
        require(session, "session");
        require(attribute_json, "attribute_json");
        const Attribute f = attribute_from_json(parse_json(attribute_json), session->session.core().space());
        const std::string used = session->session.define(f, id == nullptr ? "" : id);
        if (out_id != nullptr) {
            *out_id = dup_string(used);
        }
    });
}

dsdlab_status dsdlab_session_measure(dsdlab_session *session, const char *request_json, char **out) {
    return guarded([&] {
        require(session, "session");
        require(request_json, "request_json");
        require(out, "out");
        Session &s = session->session;
        const Json req = parse_json(request_json);
        if (!req.is_object() || !req.contains("attribute")) {
            throw DsdError(ErrorCode::Parse, "measure request needs an \"attribute\"");
        }
        std::optional<Rational> forced;
        if (req.contains("forced_outcome") && !req.at("forced_outcome").is_null()) {
            const Json &f = req.at("forced_outcome");
            forced = parse_rational(f.is_string() ? f.get<std::string>() : f.dump());
        }
        std::string id = req.contains("id") ? req.at("id").get<std::string>() : "";
        const Json &a = req.at("attribute");
        if (a.is_string()) {
            id = a.get<std::string>();
        } else {
            id = s.define(attribute_from_json(a, s.core().space()), id);
        }
        auto it = s.attributes().find(id);
        if (it == s.attributes().end()) {
            throw DsdError(ErrorCode::InvalidArgument, "unknown attribute '" + id + "'");
        }
        const Json distribution = born_json(born(it->second, s.state()));
        const MeasurementRecord &record = s.measure(id, forced);
        *out = dup_string(
            Json{{"record", to_json(record)}, {"born", distribution}, {"state", members_json(s.state())}}.dump());
    });
}

dsdlab_status dsdlab_session_preview(dsdlab_session *session, const char *attribute_json, char **out) {
    return guarded([&] {
        require(session, "session");
        require(attribute_json, "attribute_json");
        require(out, "out");
        const Session &s = session->session;
        const Json a = parse_json(attribute_json);
        Attribute f = a.is_string() ? [&] {
            auto it = s.attributes().find(a.get<std::string>());
            if (it == s.attributes().end()) {
                throw DsdError(ErrorCode::InvalidArgument, "unknown attribute '" + a.get<std::string>() + "'");
            }
            return it->second;
        }()
                                    : attribute_from_json(a, s.core().space());
        *out = dup_string(born_json(born(f, s.state())).dump());
    });
}

dsdlab_status dsdlab_session_reset(dsdlab_session *session) {
    return guarded([&] {
        require(session, "session");
        session->session.reset();
    });
}

dsdlab_status dsdlab_session_json(dsdlab_session *session, char **out) {
    return guarded([&] {
        require(session, "session");
        require(out, "out");
        *out = dup_string(session_json(session->session).dump());
    });
}

dsdlab_status dsdlab_session_transcript(dsdlab_session *session, char **out) {
    return guarded([&] {
        require(session, "session");
        require(out, "out");
        *out = dup_string(session->session.transcript().dump(2) + "\n");
    });
}

}  // extern "C"
