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

#include "gtest/gtest.h"

#include "dsdlab/error.h"

using namespace dsdlab;

namespace {

const char *kCascade = R"({
  "space": ["a", "b", "c"],
  "seed": 7,
  "attributes": {
    "chi_bc": {"a": "0", "b": "1", "c": "1"},
    "chi_ab": {"a": 1, "b": 1, "c": 0}
  },
  "steps": [
    {"attribute": "chi_bc", "forced_outcome": "1"},
    {"attribute": "chi_ab", "forced_outcome": 0}
  ]
})";

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

TEST(session, cascade_script) {
    const Session s = Session::from_script(parse_json(kCascade));
    const Json t = s.transcript();
    ASSERT_EQ(t["records"].size(), 2u);
    EXPECT_EQ(t["records"][0]["probability"], "2/3");
    EXPECT_EQ(t["records"][0]["post_state"], Json::parse(R"(["b","c"])"));
    EXPECT_EQ(t["records"][1]["probability"], "1/2");
    EXPECT_EQ(t["final_state"], Json::parse(R"(["c"])"));
    EXPECT_EQ(t["steps"][1]["forced_outcome"], "0");
    EXPECT_EQ(t["seed"], 7);
}

TEST(session, replay_is_byte_identical) {
    const char *unforced = R"({"space":["u1","u2","u3","u4","u5"],"seed":"123456789",
        "attributes":{"f":{"u1":0,"u2":1,"u3":1,"u4":2,"u5":2},"g":{"u1":"1/2","u2":0,"u3":"1/2","u4":0,"u5":0}},
        "steps":["f","g",{"attribute":{"u1":5,"u2":5,"u3":6,"u4":6,"u5":6}}]})";
    for (const char *script : {kCascade, unforced}) {
        const Json first = Session::from_script(parse_json(script)).transcript();
        const Json again = Session::from_script(first).transcript();
        EXPECT_EQ(first.dump(2), again.dump(2));
        const Json third = Session::from_script(parse_json(again.dump())).transcript();
        EXPECT_EQ(first.dump(2), third.dump(2));
    }
    const Json t = Session::from_script(parse_json(unforced)).transcript();
    EXPECT_EQ(t["records"][2]["attribute"], "u1:5,u2:5,u3:6,u4:6,u5:6");
    EXPECT_EQ(t["records"][1]["draw_index"], 1);
}

TEST(session, equal_seeds_equal_histories) {
    const SampleSpace u({"a", "b", "c", "d"});
    const Attribute f(u, {Rational(0), Rational(1), Rational(2), Rational(1)});
    const Attribute g(u, {Rational(0), Rational(0), Rational(1), Rational(1)});
    for (uint64_t seed = 0; seed < 30; seed++) {
        Session a(Ket::all(u), seed), b(Ket::all(u), seed);
        for (Session *s : {&a, &b}) {
            s->measure(f, "f");
            s->measure(g, "g");
        }
        EXPECT_EQ(a.transcript().dump(), b.transcript().dump());
    }
}

TEST(session, registry_and_reset) {
    const SampleSpace u({"a", "b", "c"});
    Session s(Ket::all(u), 1);
    const Attribute f(u, {Rational(0), Rational(1), Rational(1)});
    EXPECT_EQ(s.define(f), "a:0,b:1,c:1");
    EXPECT_EQ(s.define(f, "chi"), "chi");
    EXPECT_EQ(s.define(f, "chi"), "chi");
    EXPECT_EQ(code_of([&] { s.define(Attribute(u, {Rational(1), Rational(1), Rational(1)}), "chi"); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { s.measure("missing"); }), ErrorCode::InvalidArgument);
    s.measure("chi");
    const Json before = s.transcript();
    s.reset();
    EXPECT_EQ(s.state(), Ket::all(u));
    EXPECT_TRUE(s.core().history().empty());
    EXPECT_EQ(s.attributes().size(), 2u);
    s.measure("chi");
    EXPECT_EQ(s.transcript().dump(), before.dump());
}

TEST(session, failed_steps_leave_no_trace) {
    const SampleSpace u({"a", "b", "c"});
    Session s(Ket::from_labels(u, {"c"}), 0);
    const Attribute chi_ab(u, {Rational(1), Rational(1), Rational(0)});
    EXPECT_EQ(code_of([&] { s.measure(chi_ab, "chi_ab", Rational(1)); }), ErrorCode::ZeroProbability);
    EXPECT_TRUE(s.core().history().empty());
    Session empty(Ket::empty(u), 0);
    EXPECT_EQ(code_of([&] { empty.measure(chi_ab, "chi_ab"); }), ErrorCode::EmptyState);
    EXPECT_EQ(empty.core().stream_position(), 0u);
}

TEST(session, script_errors) {
    EXPECT_EQ(code_of([] { Session::from_script(Json::parse("[]")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { Session::from_script(Json::parse(R"({"space":["a"],"seed":-1})")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { Session::from_script(Json::parse(R"({"space":["a"],"steps":[{}]})")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { Session::from_script(Json::parse(R"({"space":["a","a"]})")); }),
              ErrorCode::InvalidArgument);
    const Session plain = Session::from_script(Json::parse(R"({"space":["a","b"]})"));
    EXPECT_EQ(plain.state().size(), 2u);
    EXPECT_EQ(plain.transcript()["seed"], 0);
}
