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

#include "gtest/gtest.h"

#include "dsdlab/dsd_enum.h"
#include "dsdlab/error.h"

using namespace dsdlab;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const DsdError &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(json_io, vectors) {
    const FieldParam f2{2, 3};
    EXPECT_EQ(vector_to_json(Vector::from_bits(5, 3), 2), 5);
    EXPECT_EQ(vector_from_json(Json(6), f2), Vector::from_bits(6, 3));
    const FieldParam f3{3, 3};
    const Vector v = vector_from_json(Json::parse("[1,0,2]"), f3);
    EXPECT_EQ(vector_to_json(v, 3), Json::parse("[1,0,2]"));
    EXPECT_EQ(code_of([&] { vector_from_json(Json(8), f2); }), ErrorCode::DimensionMismatch);
    EXPECT_THROW(vector_from_json(Json::parse("[1,3,0]"), f3), DsdError);
    EXPECT_THROW(vector_from_json(Json::parse("[1,0]"), f3), DsdError);
}

TEST(json_io, dsd_round_trip) {
    for (FieldParam f : {FieldParam{2, 3}, FieldParam{3, 2}}) {
        for (const auto &d : enumerate_dsds(f)) {
            const Json j = to_json(d);
            EXPECT_EQ(dsd_from_json(parse_json(j.dump())), d);
            for (const auto &b : d.blocks()) {
                EXPECT_EQ(subspace_from_json(to_json(b)), b);
            }
        }
    }
    const Json atom = parse_json(R"({"q":2,"n":3,"blocks":[[2,4],[3]]})");
    EXPECT_EQ(to_json(dsd_from_json(atom)).dump(), R"({"q":2,"n":3,"blocks":[[2,4],[3]]})");
    // Generators need not be reduced.
    const Json loose = parse_json(R"({"q":2,"n":3,"blocks":[[6,2],[7]]})");
    EXPECT_EQ(to_json(dsd_from_json(loose)).dump(), R"({"q":2,"n":3,"blocks":[[2,4],[7]]})");
}

TEST(json_io, dsd_errors) {
    EXPECT_EQ(code_of([] { dsd_from_json(parse_json(R"({"q":2,"n":3,"blocks":[[1],[2]]})")); }),
              ErrorCode::NotSpanning);
    EXPECT_EQ(code_of([] { dsd_from_json(parse_json(R"({"q":4,"n":3,"blocks":[]})")); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { dsd_from_json(parse_json(R"({"q":2,"blocks":[]})")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_json("{nope"); }), ErrorCode::Parse);
}

TEST(json_io, kets_and_attributes) {
    const SampleSpace u({"a", "b", "c"});
    const Ket bc = Ket::from_labels(u, {"b", "c"});
    EXPECT_EQ(to_json(bc).dump(), R"({"space":["a","b","c"],"members":["b","c"]})");
    EXPECT_EQ(ket_from_json(to_json(bc)), bc);
    EXPECT_EQ(ket_from_json(Json::parse(R"(["c","b"])"), u), bc);

    const Attribute f(u, {Rational(0), Rational(1, 2), Rational(-3)});
    EXPECT_EQ(to_json(f).dump(), R"({"space":["a","b","c"],"values":{"a":"0","b":"1/2","c":"-3"}})");
    EXPECT_EQ(attribute_from_json(to_json(f)).values(), f.values());
    const Attribute g = attribute_from_json(Json::parse(R"({"a":0,"b":"1/2","c":-3})"), u);
    EXPECT_EQ(g.values(), f.values());
    EXPECT_EQ(attribute_key(f), "a:0,b:1/2,c:-3");
    EXPECT_EQ(code_of([&] { attribute_from_json(Json::parse(R"({"a":0,"b":1})"), u); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { attribute_from_json(Json::parse(R"({"a":0,"b":1,"c":"x"})"), u); }), ErrorCode::Parse);
    const SampleSpace other({"x", "y", "z"});
    EXPECT_EQ(code_of([&] { ket_from_json(to_json(bc), other); }), ErrorCode::BasisMismatch);
}

TEST(json_io, born_and_records) {
    const SampleSpace u({"a", "b", "c"});
    const auto p = born(Attribute::characteristic(Ket::from_labels(u, {"b", "c"})), Ket::all(u));
    EXPECT_EQ(born_json(p).dump(), R"({"0":"1/3","1":"2/3"})");
    MeasurementRecord r{"chi", 1, Ket::all(u), Ket::from_labels(u, {"b", "c"}), Rational(2, 3), 42, 0, false};
    const Json j = to_json(r);
    EXPECT_EQ(j["probability"], "2/3");
    EXPECT_EQ(j["eigenvalue"], "1");
    EXPECT_EQ(j["seed"], 42);
    EXPECT_EQ(j["draw_index"], 0);
    EXPECT_EQ(j["post_state"], Json::parse(R"(["b","c"])"));
}

TEST(json_io, density_and_partitions) {
    const SampleSpace u({"a", "b", "c"});
    const auto rho = rho_of_set(Ket::from_labels(u, {"a", "b"}));
    EXPECT_EQ(to_json(rho)["entries"], Json::parse(R"([["1/2","1/2","0"],["1/2","1/2","0"],["0","0","0"]])"));
    EXPECT_EQ(partition_json(SetPartition::make({{0, 2}, {1}}, 3), u), Json::parse(R"([["a","c"],["b"]])"));
}
