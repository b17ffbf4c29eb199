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

#include "dsdlab/json_io.h"

#include "dsdlab/error.h"

namespace dsdlab {

namespace {

[[noreturn]] void bad(const std::string &what) {
    throw DsdError(ErrorCode::Parse, what);
}

const Json &member(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

// nlohmann keeps integers built in C++ as signed even when nonnegative.
bool is_natural(const Json &j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<int64_t>() >= 0);
}

uint32_t small_uint(const Json &j, const char *what) {
    if (!is_natural(j) || j.get<uint64_t>() > UINT32_MAX) {
        bad(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<uint32_t>();
}

Rational rational_from_json(const Json &j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(j.get<uint64_t>()) : Rational(j.get<int64_t>());
    }
    bad("expected a rational string or an integer, got " + j.dump());
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

Json vector_to_json(const Vector &v, uint32_t q) {
    if (q == 2 && v.size() <= 64) {
        return v.to_bits();
    }
    Json out = Json::array();
    for (uint32_t c : v.coords()) {
        out.push_back(c);
    }
    return out;
}

Vector vector_from_json(const Json &j, const FieldParam &field) {
    if (is_natural(j)) {
        if (field.q != 2) {
            bad("integer vector encoding is only used for q=2");
        }
        return Vector::from_bits(j.get<uint64_t>(), field.n);
    }
    if (!j.is_array()) {
        bad("vector must be an integer or a coordinate array, got " + j.dump());
    }
    std::vector<uint32_t> coords;
    for (const auto &c : j) {
        coords.push_back(small_uint(c, "coordinate"));
    }
    Vector v(std::move(coords));
    check_vector(v, field);
    return v;
}

FieldParam field_from_json(const Json &j) {
    return FieldParam::make(small_uint(member(j, "q"), "q"), small_uint(member(j, "n"), "n"));
}

namespace {

Json basis_json(const Subspace &s) {
    Json out = Json::array();
    for (const auto &v : s.basis()) {
        out.push_back(vector_to_json(v, s.field().q));
    }
    return out;
}

Subspace basis_from_json(const Json &j, const FieldParam &field) {
    if (!j.is_array()) {
        bad("basis must be an array");
    }
    std::vector<Vector> vectors;
    for (const auto &v : j) {
        vectors.push_back(vector_from_json(v, field));
    }
    return canonicalize(vectors, field);
}

}  // namespace

Json to_json(const Subspace &s) {
    return Json{{"q", s.field().q}, {"n", s.field().n}, {"basis", basis_json(s)}};
}

Subspace subspace_from_json(const Json &j) {
    return basis_from_json(member(j, "basis"), field_from_json(j));
}

Json to_json(const Dsd &d) {
    Json blocks = Json::array();
    for (const auto &b : d.blocks()) {
        blocks.push_back(basis_json(b));
    }
    return Json{{"q", d.field().q}, {"n", d.field().n}, {"blocks", blocks}};
}

Dsd dsd_from_json(const Json &j) {
    const FieldParam field = field_from_json(j);
    const Json &blocks = member(j, "blocks");
    if (!blocks.is_array()) {
        bad("blocks must be an array");
    }
    std::vector<Subspace> parsed;
    for (const auto &b : blocks) {
        parsed.push_back(basis_from_json(b, field));
    }
    return Dsd::validate(std::move(parsed), field);
}

Json to_json(const SampleSpace &space) {
    return Json(space.labels());
}

SampleSpace space_from_json(const Json &j) {
    if (!j.is_array()) {
        bad("sample space must be an array of labels");
    }
    std::vector<std::string> labels;
    for (const auto &l : j) {
        if (!l.is_string()) {
            bad("labels must be strings");
        }
        labels.push_back(l.get<std::string>());
    }
    return SampleSpace(std::move(labels));
}

Json members_json(const Ket &k) {
    return Json(k.labels());
}

Json to_json(const Ket &k) {
    return Json{{"space", to_json(k.space())}, {"members", members_json(k)}};
}

Ket ket_from_json(const Json &j, const std::optional<SampleSpace> &space) {
    if (j.is_array() && space.has_value()) {
        std::vector<std::string> labels;
        for (const auto &l : j) {
            if (!l.is_string()) {
                bad("ket members must be labels");
            }
            labels.push_back(l.get<std::string>());
        }
        return Ket::from_labels(*space, labels);
    }
    SampleSpace own = space_from_json(member(j, "space"));
    if (space.has_value() && !(own == *space)) {
        throw DsdError(ErrorCode::BasisMismatch, "ket uses a different sample space");
    }
    return ket_from_json(member(j, "members"), own);
}

Json values_json(const Attribute &f) {
    Json out = Json::object();
    for (size_t i = 0; i < f.space().size(); i++) {
        out[f.space().label(i)] = format_rational(f.value(i));
    }
    return out;
}

Json to_json(const Attribute &f) {
    return Json{{"space", to_json(f.space())}, {"values", values_json(f)}};
}

Attribute attribute_from_json(const Json &j, const std::optional<SampleSpace> &space) {
    const Json *values = &j;
    std::optional<SampleSpace> sp = space;
    if (j.is_object() && j.contains("values")) {
        values = &j.at("values");
        if (j.contains("space")) {
            SampleSpace own = space_from_json(j.at("space"));
            if (sp.has_value() && !(own == *sp)) {
                throw DsdError(ErrorCode::BasisMismatch, "attribute uses a different sample space");
            }
            sp = own;
        }
    }
    if (!sp.has_value()) {
        bad("attribute needs a sample space");
    }
    if (!values->is_object()) {
        bad("attribute values must be an object keyed by label");
    }
    std::vector<std::optional<Rational>> slots(sp->size());
    for (const auto &[label, value] : values->items()) {
        slots[sp->index_of(label)] = rational_from_json(value);
    }
    std::vector<Rational> out;
    for (size_t i = 0; i < slots.size(); i++) {
        if (!slots[i].has_value()) {
            throw DsdError(ErrorCode::InvalidArgument, "attribute has no value for '" + sp->label(i) + "'");
        }
        out.push_back(*slots[i]);
    }
    return Attribute(*sp, std::move(out));
}

std::string attribute_key(const Attribute &f) {
    std::string out;
    for (size_t i = 0; i < f.space().size(); i++) {
        out += (i ? "," : "") + f.space().label(i) + ":" + format_rational(f.value(i));
    }
    return out;
}

Json born_json(const std::map<Rational, Rational> &born) {
    Json out = Json::object();
    for (const auto &[r, p] : born) {
        out[format_rational(r)] = format_rational(p);
    }
    return out;
}

Json to_json(const MeasurementRecord &r) {
    return Json{{"attribute", r.attribute_id},
                {"eigenvalue", format_rational(r.eigenvalue)},
                {"probability", format_rational(r.probability)},
                {"pre_state", members_json(r.pre_state)},
                {"post_state", members_json(r.post_state)},
                {"forced", r.forced},
                {"seed", r.seed},
                {"draw_index", r.draw_index}};
}

Json matrix_json(const RationalMatrix &m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.size(); i++) {
        Json row = Json::array();
        for (size_t k = 0; k < m.size(); k++) {
            row.push_back(format_rational(m.at(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const DensityMatrix &rho) {
    return Json{{"space", to_json(rho.space())}, {"entries", matrix_json(rho.matrix())}};
}

Json partition_json(const SetPartition &p, const SampleSpace &space) {
    Json out = Json::array();
    for (const auto &block : p.blocks()) {
        Json labels = Json::array();
        for (size_t i : block) {
            labels.push_back(space.label(i));
        }
        out.push_back(std::move(labels));
    }
    return out;
}

}  // namespace dsdlab
