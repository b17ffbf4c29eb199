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

#include "dsdlab/dsd_enum.h"

#include <map>
#include <set>

#include "gtest/gtest.h"

#include "dsdlab/counting.h"
#include "dsdlab/error.h"
#include "oracle.h"
#include "z2_lists.h"

using namespace dsdlab;
namespace z2 = oracle::z2;

namespace {

template <size_t N>
std::vector<Dsd> parse_all(const std::array<std::string_view, N> &texts) {
    std::vector<Dsd> out;
    for (auto t : texts) {
        out.push_back(oracle::parse_listed(std::string(t), 3));
    }
    return out;
}

// Replaces the one repeated entry with the entry it should have been.
std::set<Dsd> corrected(std::vector<Dsd> listed) {
    std::set<Dsd> out;
    size_t repeats = 0;
    for (const auto &d : listed) {
        repeats += out.insert(d).second ? 0 : 1;
    }
    EXPECT_EQ(repeats, 1u);
    out.insert(oracle::parse_listed(std::string(z2::kMissingBasis), 3));
    return out;
}

std::set<Dsd> as_set(const std::vector<Dsd> &v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST(dsd_enum, counts_match_formula) {
    for (uint32_t n = 0; n <= 4; n++) {
        for (uint32_t m = 0; m <= n; m++) {
            EXPECT_EQ(BigInt(count_dsds({2, n}, {m, std::nullopt})), dsd_count(2, n, m)) << n << " " << m;
        }
        EXPECT_EQ(BigInt(count_dsds({2, n})), dsd_total(2, n));
    }
    for (uint32_t n = 0; n <= 3; n++) {
        for (uint32_t m = 0; m <= n; m++) {
            EXPECT_EQ(BigInt(count_dsds({3, n}, {m, std::nullopt})), dsd_count(3, n, m));
        }
    }
    EXPECT_EQ(BigInt(count_dsds({5, 2})), dsd_total(5, 2));
    EXPECT_EQ(count_dsds({2, 5}), 540145u);
}

TEST(dsd_enum, matches_brute_force) {
    for (FieldParam f : {FieldParam{2, 3}, FieldParam{3, 2}}) {
        std::set<std::set<oracle::Elements>> brute;
        for (const auto &d : oracle::all_dsds(f.q, f.n)) {
            brute.insert({d.begin(), d.end()});
        }
        std::set<std::set<oracle::Elements>> got;
        for (const auto &d : enumerate_dsds(f)) {
            const auto b = oracle::blocks(d);
            got.insert({b.begin(), b.end()});
        }
        EXPECT_EQ(got, brute);
    }
}

TEST(dsd_enum, anchored_counts_independent_of_anchor) {
    for (uint32_t n = 1; n <= 4; n++) {
        const FieldParam f{2, n};
        for (uint64_t bits : {uint64_t{1}, (uint64_t{1} << n) - 1, uint64_t{1} << (n - 1), uint64_t{3} & ((1u << n) - 1)}) {
            for (uint32_t m = 1; m <= n; m++) {
                const DsdQuery query{m, Vector::from_bits(bits, n)};
                EXPECT_EQ(BigInt(count_dsds(f, query)), dsd_count_star(2, n, m)) << n << " " << m << " " << bits;
            }
        }
    }
    for (uint64_t code : {1u, 4u, 8u}) {
        for (uint32_t m = 1; m <= 3; m++) {
            const FieldParam f{3, 3};
            EXPECT_EQ(BigInt(count_dsds(f, {m, Vector::unpack(code, f)})), dsd_count_star(3, 3, m));
        }
    }
}

TEST(dsd_enum, maximal_list) {
    const auto got = enumerate_dsds({2, 3}, {3, std::nullopt});
    ASSERT_EQ(got.size(), 28u);
    EXPECT_EQ(as_set(got), corrected(parse_all(z2::kMaximal)));
}

TEST(dsd_enum, atomic_list) {
    const auto got = enumerate_dsds({2, 3}, {2, std::nullopt});
    const auto listed = parse_all(z2::kAtomic);
    EXPECT_EQ(as_set(listed).size(), 28u);
    EXPECT_EQ(as_set(got), as_set(listed));
    // Each printed row is one ray with its four complements.
    for (size_t row = 0; row < 7; row++) {
        std::set<Subspace> rays;
        for (size_t i = 0; i < 4; i++) {
            const auto &d = listed[row * 4 + i];
            rays.insert(d.blocks()[0].dim() == 1 ? d.blocks()[0] : d.blocks()[1]);
        }
        EXPECT_EQ(rays.size(), 1u);
    }
}

TEST(dsd_enum, anchored_lists) {
    const Vector ab = Vector::from_bits(3, 3);
    const auto two = enumerate_dsds({2, 3}, {2, ab});
    EXPECT_EQ(two.size(), 16u);
    EXPECT_EQ(as_set(two), as_set(parse_all(z2::kTwoBlockWithAb)));

    const auto three = enumerate_dsds({2, 3}, {3, Vector::from_bits(7, 3)});
    EXPECT_EQ(three.size(), 12u);
    EXPECT_EQ(as_set(three), corrected(parse_all(z2::kBasesWithAbc)));
}

TEST(dsd_enum, small_cases) {
    const auto zero = enumerate_dsds({2, 0});
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].blocks().empty());
    const auto one = enumerate_dsds({2, 1});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].is_blob());
    EXPECT_EQ(enumerate_dsds({2, 3}, {1, std::nullopt}).size(), 1u);
    EXPECT_EQ(enumerate_dsds({2, 3}, {4, std::nullopt}).size(), 0u);
}

TEST(dsd_enum, canonical_order_and_early_stop) {
    const auto all = enumerate_dsds({2, 4});
    for (size_t i = 0; i + 1 < all.size(); i++) {
        ASSERT_LT(all[i], all[i + 1]);
    }
    for (const auto &d : all) {
        for (size_t i = 0; i + 1 < d.size(); i++) {
            ASSERT_LT(d.blocks()[i], d.blocks()[i + 1]);
        }
    }
    size_t seen = 0;
    for_each_dsd({2, 4}, {}, [&](const Dsd &) { return ++seen < 10; });
    EXPECT_EQ(seen, 10u);
    std::vector<Dsd> first;
    for_each_dsd({2, 4}, {}, [&](const Dsd &d) {
        first.push_back(d);
        return first.size() < 5;
    });
    EXPECT_EQ(first, std::vector<Dsd>(all.begin(), all.begin() + 5));
}

TEST(dsd_enum, ceiling) {
    try {
        count_dsds({2, 6}, {}, Limits::defaults());
        FAIL();
    } catch (const DsdError &e) {
        EXPECT_EQ(e.code(), ErrorCode::CeilingExceeded);
    }
    EXPECT_THROW(enumerate_dsds({3, 4}, {}, Limits::defaults()), DsdError);
}

TEST(dsd_enum, maximal_above_examples) {
    const Dsd atom = oracle::parse_listed("{{ac},{a,bc,abc}}", 3);
    const auto above = maximal_above(atom);
    EXPECT_EQ(above.count, 3);
    ASSERT_TRUE(above.list.has_value());
    std::set<Dsd> want;
    for (auto t : z2::kMaximalAboveAc) {
        want.insert(oracle::parse_listed(std::string(t), 3));
    }
    EXPECT_EQ(as_set(*above.list), want);

    const Dsd atom4 = oracle::dsd_from_words({{"a", "b"}, {"c", "d"}}, 4);
    const auto above4 = maximal_above(atom4);
    EXPECT_EQ(above4.count, 9);
    EXPECT_EQ(above4.list->size(), 9u);

    try {
        maximal_above(oracle::basis_from_words({"a", "b", "c"}, 3));
        FAIL();
    } catch (const DsdError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAnAtom);
    }
}

TEST(dsd_enum, maximal_above_every_atom) {
    for (uint32_t n = 2; n <= 4; n++) {
        const auto maximal = enumerate_dsds({2, n}, {n, std::nullopt});
        for (const auto &atom : enumerate_dsds({2, n}, {2, std::nullopt})) {
            const auto above = maximal_above(atom);
            size_t brute = 0;
            for (const auto &w : maximal) {
                brute += refines(atom, w) ? 1 : 0;
            }
            const uint32_t k = static_cast<uint32_t>(atom.blocks()[0].dim());
            EXPECT_EQ(above.count, dsd_count(2, k, k) * dsd_count(2, n - k, n - k));
            EXPECT_EQ(BigInt(brute), above.count);
            EXPECT_EQ(above.list->size(), brute);
        }
    }
    // Beyond the ceiling only the count comes back.
    Limits tight = Limits::defaults();
    tight.set_ceiling(2, 2);
    const auto above = maximal_above(oracle::parse_listed("{{ac},{a,bc,abc}}", 3), tight);
    EXPECT_EQ(above.count, 3);
    EXPECT_FALSE(above.list.has_value());
}
