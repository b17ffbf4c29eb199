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

#include "dsdlab/subspace.h"

#include <random>

#include "gtest/gtest.h"

#include "oracle.h"
#include "dsdlab/dsd_enum.h"
#include "dsdlab/error.h"
#include "dsdlab/subspace_enum.h"

using namespace dsdlab;

namespace {

Vector bits(uint64_t b, size_t n) {
    return Vector::from_bits(b, n);
}

// Digit-string literal, coordinate 0 first: "110" is (1,1,0).
Vector vec(const std::string &digits) {
    std::vector<uint32_t> c;
    for (char ch : digits) {
        c.push_back(static_cast<uint32_t>(ch - '0'));
    }
    return Vector(std::move(c));
}

Subspace span_of(std::initializer_list<const char *> vs, FieldParam field = {2, 3}) {
    std::vector<Vector> rows;
    for (const char *v : vs) {
        rows.push_back(vec(v));
    }
    return canonicalize(rows, field);
}

std::vector<std::string> basis_strings(const Subspace &s) {
    std::vector<std::string> out;
    for (const auto &v : s.basis()) {
        out.push_back(v.str());
    }
    return out;
}

}  // namespace

TEST(subspace, canonicalize_examples) {
    EXPECT_EQ(basis_strings(span_of({"110", "011"})), (std::vector<std::string>{"101", "011"}));
    EXPECT_EQ(span_of({}).dim(), 0u);
    EXPECT_EQ(basis_strings(span_of({"100", "010", "110"})), (std::vector<std::string>{"100", "010"}));
    EXPECT_EQ(span_of({"110", "011"}).pivots(), (std::vector<uint32_t>{0, 1}));
    EXPECT_THROW(canonicalize({vec("10"), vec("101")}, {2, 3}), DsdError);
}

TEST(subspace, canonical_form_is_span_invariant) {
    std::mt19937_64 rng(1);
    for (uint32_t q : {2u, 3u, 5u}) {
        const uint32_t n = q == 2 ? 6 : 4;
        const FieldParam field{q, n};
        for (int trial = 0; trial < 200; trial++) {
            std::vector<Vector> a;
            const size_t count = rng() % (n + 2);
            for (size_t i = 0; i < count; i++) {
                a.push_back(Vector::unpack(rng() % field.space_size(), field));
            }
            // b: random invertible recombination of a, plus dependent extras.
            std::vector<Vector> b = a;
            for (int step = 0; step < 20 && b.size() > 1; step++) {
                size_t i = rng() % b.size(), j = rng() % b.size();
                if (i != j) {
                    b[i] = add(b[i], scale(b[j], 1 + rng() % (q - 1), q), q);
                }
                b[i] = scale(b[i], 1 + rng() % (q - 1), q);
            }
            if (!a.empty()) {
                b.push_back(add(a[0], a.back(), q));
            }
            std::shuffle(b.begin(), b.end(), rng);
            const Subspace sa = canonicalize(a, field);
            EXPECT_EQ(sa, canonicalize(b, field));
            EXPECT_EQ(sa, canonicalize(sa.basis(), field));
            EXPECT_EQ(sa, canonicalize_generic(a, field));
            EXPECT_EQ(oracle::elements(sa), oracle::span([&] {
                          std::vector<uint64_t> g;
                          for (const auto &v : a) {
                              g.push_back(v.pack(q));
                          }
                          return g;
                      }(),
                                                          q, n));
        }
    }
}

TEST(subspace, intersect_examples) {
    EXPECT_EQ(intersect(span_of({"100", "010"}), span_of({"010", "001"})), span_of({"010"}));
    EXPECT_EQ(intersect(span_of({"100"}), span_of({"010"})), Subspace::zero({2, 3}));
    const Subspace a = span_of({"110", "011"});
    EXPECT_EQ(intersect(a, a), a);
}

TEST(subspace, sum_and_contains_examples) {
    EXPECT_EQ(sum(span_of({"100"}), span_of({"010"})), span_of({"100", "010"}));
    const Subspace a = span_of({"101", "011"});
    EXPECT_EQ(sum(a, Subspace::zero({2, 3})), a);
    EXPECT_EQ(sum(a, span_of({"100"})), Subspace::full({2, 3}));
    EXPECT_TRUE(contains(a, vec("110")));
    EXPECT_TRUE(contains(a, vec("000")));
    EXPECT_FALSE(contains(span_of({"100"}), vec("010")));
}

TEST(subspace, field_mismatch) {
    EXPECT_THROW(intersect(Subspace::full({2, 3}), Subspace::full({2, 2})), DsdError);
    EXPECT_THROW(sum(Subspace::full({2, 3}), Subspace::full({3, 3})), DsdError);
    EXPECT_THROW(contains(Subspace::full({2, 3}), vec("10")), DsdError);
}

// intersect, sum, contains and subspace order against element sets, with the
// dimension formula, for every pair of subspaces.
TEST(subspace, exhaustive_against_element_sets) {
    for (FieldParam field : {FieldParam{2, 3}, FieldParam{2, 4}, FieldParam{3, 2}, FieldParam{3, 3}, FieldParam{5, 2}}) {
        const auto all = all_subspaces(field, std::nullopt);
        for (const auto &a : all) {
            const auto ea = oracle::elements(a);
            for (const auto &b : all) {
                const auto eb = oracle::elements(b);
                const Subspace meet = intersect(a, b);
                const Subspace join = sum(a, b);
                EXPECT_EQ(oracle::elements(meet), oracle::intersection(ea, eb));
                std::vector<uint64_t> gens(ea.begin(), ea.end());
                gens.insert(gens.end(), eb.begin(), eb.end());
                EXPECT_EQ(oracle::elements(join), oracle::span(gens, field.q, field.n));
                EXPECT_EQ(a.dim() + b.dim(), meet.dim() + join.dim());
                EXPECT_EQ(is_subspace_of(a, b), oracle::subset(ea, eb));
            }
            for (uint64_t code = 0; code < field.space_size(); code++) {
                EXPECT_EQ(contains(a, Vector::unpack(code, field)), ea.count(code) == 1);
            }
        }
    }
}

TEST(subspace, elements_enumerates_span) {
    const Subspace a = span_of({"110", "011"});
    auto els = a.elements();
    EXPECT_EQ(els.size(), 4u);
    std::set<uint64_t> packed;
    for (const auto &v : els) {
        packed.insert(v.pack(2));
    }
    EXPECT_EQ(packed, oracle::elements(a));
}

TEST(subspace, components_along_examples) {
    const FieldParam f{2, 3};
    std::vector<Subspace> blocks = {span_of({"100"}), span_of({"010", "001"})};
    auto parts = components_along(blocks, vec("111"));
    EXPECT_EQ(parts[0].str(), "100");
    EXPECT_EQ(parts[1].str(), "011");
    parts = components_along(blocks, vec("000"));
    EXPECT_TRUE(parts[0].is_zero() && parts[1].is_zero());

    // Oracle: search all pairs (x, y) in V1 x V2 with x + y = 100.
    std::vector<Subspace> skew = {span_of({"110"}), span_of({"010", "001"})};
    std::vector<std::pair<uint64_t, uint64_t>> solutions;
    for (uint64_t x : oracle::elements(skew[0])) {
        for (uint64_t y : oracle::elements(skew[1])) {
            if ((x ^ y) == vec("100").to_bits()) {
                solutions.emplace_back(x, y);
            }
        }
    }
    ASSERT_EQ(solutions.size(), 1u);
    parts = components_along(skew, vec("100"));
    EXPECT_EQ(parts[0].to_bits(), solutions[0].first);
    EXPECT_EQ(parts[1].to_bits(), solutions[0].second);
    EXPECT_EQ(parts[0].str(), "110");
    EXPECT_EQ(parts[1].str(), "010");

    EXPECT_THROW(components_along(std::vector<Subspace>{span_of({"100"}), span_of({"110"})}, vec("100")), DsdError);
    EXPECT_THROW(components_along(std::vector<Subspace>{span_of({"100"}), span_of({"100", "010"})}, vec("100")),
                 DsdError);
}

TEST(subspace, components_reconstruct_for_every_dsd) {
    for (FieldParam field : {FieldParam{2, 1}, FieldParam{2, 2}, FieldParam{2, 3}, FieldParam{3, 2}}) {
        for (const auto &d : enumerate_dsds(field)) {
            for (uint64_t code = 0; code < field.space_size(); code++) {
                const Vector v = Vector::unpack(code, field);
                const auto parts = components_along(d.blocks(), v);
                Vector total = Vector::zero(field.n);
                for (size_t i = 0; i < parts.size(); i++) {
                    EXPECT_TRUE(contains(d.blocks()[i], parts[i]));
                    total = add(total, parts[i], field.q);
                }
                EXPECT_EQ(total, v);
            }
        }
    }
}

TEST(subspace, total_order) {
    const auto all = all_subspaces({2, 3}, std::nullopt);
    for (size_t i = 0; i + 1 < all.size(); i++) {
        EXPECT_LT(all[i], all[i + 1]);
    }
    EXPECT_LT(FieldParam({2, 3}), FieldParam({3, 1}));
    EXPECT_EQ(bits(5, 3).str(), "101");
}
