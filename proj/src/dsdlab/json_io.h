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

#ifndef DSDLAB_JSON_IO_H
#define DSDLAB_JSON_IO_H

#include <map>
#include <optional>

#include "json.hpp"

#include "dsdlab/density.h"
#include "dsdlab/dsd.h"
#include "dsdlab/measurement.h"
#include "dsdlab/partition_logic.h"
#include "dsdlab/qmsets.h"

namespace dsdlab {

// Insertion-ordered so that emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to ErrorCode::Parse.
Json parse_json(std::string_view text);

/// q = 2: integer with bit i = coordinate i. Otherwise a coordinate array.
Json vector_to_json(const Vector &v, uint32_t q);
Vector vector_from_json(const Json &j, const FieldParam &field);
FieldParam field_from_json(const Json &j);

/// {"q":2,"n":3,"basis":[5,3]}
Json to_json(const Subspace &s);
Subspace subspace_from_json(const Json &j);
/// {"q":2,"n":3,"blocks":[[3],[2,4]]}
Json to_json(const Dsd &d);
Dsd dsd_from_json(const Json &j);

Json to_json(const SampleSpace &space);
SampleSpace space_from_json(const Json &j);

/// Member labels in sample-space order.
Json members_json(const Ket &k);
/// {"space":[...],"members":[...]}
Json to_json(const Ket &k);
/// Accepts the full object, or a bare member array when space is given.
Ket ket_from_json(const Json &j, const std::optional<SampleSpace> &space = std::nullopt);

/// {"a":"0","b":"1"} in sample-space order.
Json values_json(const Attribute &f);
/// {"space":[...],"values":{...}}
Json to_json(const Attribute &f);
/// Accepts the full object, or a bare values map when space is given. Values
/// may be rational strings or JSON integers.
Attribute attribute_from_json(const Json &j, const std::optional<SampleSpace> &space = std::nullopt);
/// Stable identifier for an anonymous attribute, e.g. "a:0,b:1,c:1".
std::string attribute_key(const Attribute &f);

/// Eigenvalue string to probability string, ascending eigenvalues.
Json born_json(const std::map<Rational, Rational> &born);

Json to_json(const MeasurementRecord &r);

/// Row-major rational strings.
Json matrix_json(const RationalMatrix &m);
Json to_json(const DensityMatrix &rho);

/// Blocks as label arrays.
Json partition_json(const SetPartition &p, const SampleSpace &space);

}  // namespace dsdlab

#endif
