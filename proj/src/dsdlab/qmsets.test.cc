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

#include "dsdlab/qmsets.h"

#include <random>

#include "gtest/gtest.h"

#include "dsdlab/error.h"

using namespace dsdlab;

namespace {

const SampleSpace U({"a", "b", "c"});
const SampleSpace U1({"a'", "b'", "c'"});
const SampleSpace U2({"a''", "b''", "c''"});

Ket ket(const SampleSpace &space, std::vector<std::string> labels) {
    return Ket::from_labels(space, labels);
}

Attribute attr(const SampleSpace &space, std::vector<int> values) {
    std::vector<Rational> v(values.begin(), values.end());
    return Attribute(space, v);
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const DsdError &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::InvalidArgument;
}

Attribute random_attribute(const SampleSpace &space, std::mt19937_64 &rng) {
    std::vector<Rational> v;
    for (size_t i = 0; i < space.size(); i++) {
        v.emplace_back(static_cast<int>(rng() % 4) - 1, static_cast<int>(rng() % 3) + 1);
    }
    return Attribute(space, v);
}

SampleSpace space_of(size_t n) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; i++) {
        labels.push_back("u" + std::to_string(i + 1));
    }
    return SampleSpace(labels);
}

}  // namespace

TEST(qmsets, sample_space_and_kets) {
    EXPECT_EQ(code_of([] { SampleSpace({"a", "a"}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { SampleSpace({}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { ket(U, {"d"}); }), ErrorCode::InvalidArgument);
    const Ket ac = ket(U, {"c", "a"});
    EXPECT_EQ(ac.members(), 5u);
    EXPECT_EQ(ac.labels(), (std::vector<std::string>{"a", "c"}));
    EXPECT_EQ(Ket::all(U).size(), 3u);
    EXPECT_TRUE(Ket::empty(U).is_empty());
    EXPECT_EQ(add(ket(U, {"a", "b"}), ket(U, {"b", "c"})), ac);
}

TEST(qmsets, ket_table) {
    // U' basis kets are {a,b}, {b,c}, {a,b,c}; U'' kets are {a}, {a,b}, {a,c}.
    const BasisMap to1(U, U1, {0b011, 0b110, 0b111});
    const BasisMap to2(U, U2, {0b001, 0b011, 0b101});
    const std::vector<std::tuple<std::vector<std::string>, std::vector<std::string>, std::vector<std::string>>> rows = {
        {{"a", "b", "c"}, {"c'"}, {"a''", "b''", "c''"}},
        {{"a", "b"}, {"a'"}, {"b''"}},
        {{"b", "c"}, {"b'"}, {"b''", "c''"}},
        {{"a", "c"}, {"a'", "b'"}, {"c''"}},
        {{"a"}, {"b'", "c'"}, {"a''"}},
        {{"b"}, {"a'", "b'", "c'"}, {"a''", "b''"}},
        {{"c"}, {"a'", "c'"}, {"a''", "c''"}},
        {{}, {}, {}},
    };
    for (const auto &[u, u1, u2] : rows) {
        const Ket s = ket(U, u);
        EXPECT_EQ(change_basis(s, to1), ket(U1, u1));
        EXPECT_EQ(change_basis(s, to2), ket(U2, u2));
        EXPECT_EQ(change_basis(ket(U1, u1), to1.inverse()), s);
    }
    EXPECT_EQ(code_of([] { BasisMap(U, U1, {0b011, 0b110, 0b101}); }), ErrorCode::SingularMap);
    EXPECT_EQ(code_of([&] { change_basis(ket(U1, {"a'"}), to1); }), ErrorCode::BasisMismatch);
}

TEST(qmsets, basis_change_round_trip) {
    std::mt19937_64 rng(11);
    for (size_t n = 1; n <= 4; n++) {
        const SampleSpace src = space_of(n);
        std::vector<std::string> primed;
        for (const auto &l : src.labels()) {
            primed.push_back(l + "'");
        }
        const SampleSpace dst(primed);
        int built = 0;
        while (built < 5) {
            std::vector<uint64_t> rows;
            for (size_t i = 0; i < n; i++) {
                rows.push_back(rng() & ((uint64_t{1} << n) - 1));
            }
            try {
                const BasisMap map(src, dst, rows);
                built++;
                for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
                    const Ket s(src, mask);
                    const Ket t = change_basis(s, map);
                    EXPECT_EQ(change_basis(t, map.inverse()), s);
                    // Rebuild s from the target coordinates by summing rows.
                    uint64_t back = 0;
                    for (size_t i = 0; i < n; i++) {
                        back ^= t.contains(i) ? rows[i] : 0;
                    }
                    EXPECT_EQ(back, mask);
                }
            } catch (const DsdError &e) {
                EXPECT_EQ(e.code(), ErrorCode::SingularMap);
            }
        }
    }
}

TEST(qmsets, brackets_and_norms) {
    for (size_t j = 0; j < 3; j++) {
        for (size_t k = 0; k < 3; k++) {
            EXPECT_EQ(bracket(Ket(U, 1u << j), Ket(U, 1u << k)), j == k ? 1u : 0u);
        }
    }
    EXPECT_EQ(bracket(Ket::empty(U), Ket::all(U)), 0u);
    EXPECT_EQ(bracket(ket(U, {"a", "b"}), ket(U, {"b", "c"})), 1u);
    EXPECT_EQ(norm_squared(ket(U, {"a", "b"})), 2u);  // ‖{a'}‖² read in U
    EXPECT_EQ(norm_squared(Ket::empty(U)), 0u);
    EXPECT_EQ(norm_squared(Ket::all(U)), 3u);
    EXPECT_EQ(code_of([] { bracket(ket(U, {"a"}), ket(U1, {"a'"})); }), ErrorCode::BasisMismatch);

    // Same abstract vectors, different basis, different bracket.
    const BasisMap to1(U, U1, {0b011, 0b110, 0b111});
    const Ket a = ket(U, {"a"});
    const Ket ab = ket(U, {"a", "b"});
    EXPECT_EQ(bracket(a, ab), 1u);
    EXPECT_EQ(change_basis(a, to1), ket(U1, {"b'", "c'"}));
    EXPECT_EQ(bracket(change_basis(a, to1), change_basis(ab, to1)), 0u);

    // Not linear in the first slot once the summands overlap.
    const Ket t = ket(U, {"a", "b"});
    const Ket t2 = ket(U, {"b", "c"});
    const Ket s = ket(U, {"b"});
    EXPECT_EQ(bracket(add(t, t2), s), 0u);
    EXPECT_EQ(bracket(t, s) + bracket(t2, s), 2u);
}

TEST(qmsets, eigen_check) {
    const Attribute chi_bc = Attribute::characteristic(ket(U, {"b", "c"}));
    EXPECT_EQ(eigen_check(chi_bc, ket(U, {"b", "c"})), Rational(1));
    EXPECT_EQ(eigen_check(chi_bc, ket(U, {"a"})), Rational(0));
    EXPECT_FALSE(eigen_check(chi_bc, ket(U, {"a", "b"})).has_value());
    EXPECT_EQ(code_of([&] { eigen_check(chi_bc, Ket::empty(U)); }), ErrorCode::EmptyState);
}

TEST(qmsets, attribute_dsd) {
    const Dsd d = attribute_dsd(Attribute::characteristic(ket(U, {"b", "c"})));
    const FieldParam f{2, 3};
    EXPECT_EQ(d, Dsd::validate({canonicalize({Vector::from_bits(1, 3)}, f),
                                canonicalize({Vector::from_bits(2, 3), Vector::from_bits(4, 3)}, f)}));
    EXPECT_TRUE(attribute_dsd(attr(U, {4, 4, 4})).is_blob());
    EXPECT_TRUE(attribute_dsd(attr(U, {1, 2, 3})).is_maximal());

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; trial++) {
        const SampleSpace space = space_of(1 + rng() % 6);
        const Attribute f = random_attribute(space, rng);
        const Attribute g = random_attribute(space, rng);
        EXPECT_TRUE(compatible(attribute_dsd(f), attribute_dsd(g)));
        EXPECT_EQ(attribute_dsd(f).size(), f.spectrum().size());
    }
}

TEST(qmsets, spectral_decomposition) {
    const auto terms = spectral_decomposition(attr(U, {5, 7, 7}));
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_EQ(terms[0].eigenvalue, 5);
    EXPECT_EQ(terms[0].characteristic.values(), (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(terms[1].eigenvalue, 7);
    EXPECT_EQ(terms[1].characteristic.values(), (std::vector<Rational>{0, 1, 1}));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; trial++) {
        const SampleSpace space = space_of(1 + rng() % 6);
        const Attribute f = random_attribute(space, rng);
        std::vector<Rational> rebuilt(space.size());
        for (const auto &term : spectral_decomposition(f)) {
            for (size_t i = 0; i < space.size(); i++) {
                rebuilt[i] += term.eigenvalue * term.characteristic.value(i);
            }
        }
        EXPECT_EQ(rebuilt, f.values());
    }
}

TEST(qmsets, born_examples) {
    const auto p = born(Attribute::characteristic(ket(U, {"b", "c"})), Ket::all(U));
    EXPECT_EQ(p, (std::map<Rational, Rational>{{0, Rational(1, 3)}, {1, Rational(2, 3)}}));
    const auto q = born(Attribute::characteristic(ket(U, {"a", "b"})), ket(U, {"b", "c"}));
    EXPECT_EQ(q, (std::map<Rational, Rational>{{0, Rational(1, 2)}, {1, Rational(1, 2)}}));
    const auto c = born(attr(U, {1, 2, 2}), ket(U, {"b", "c"}));
    EXPECT_EQ(c, (std::map<Rational, Rational>{{2, 1}}));
    EXPECT_EQ(code_of([] { born(attr(U, {1, 2, 2}), Ket::empty(U)); }), ErrorCode::EmptyState);
}

TEST(qmsets, born_sums_to_one) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; trial++) {
        const SampleSpace space = space_of(1 + rng() % 6);
        const Attribute f = random_attribute(space, rng);
        const uint64_t mask = rng() & ((uint64_t{1} << space.size()) - 1);
        if (mask == 0) {
            continue;
        }
        const Ket s(space, mask);
        Rational total = 0;
        size_t hits = 0;
        for (const auto &[r, pr] : born(f, s)) {
            EXPECT_GT(pr, 0);
            total += pr;
            hits += project(f, r, s).size();
        }
        EXPECT_EQ(total, 1);
        EXPECT_EQ(hits, s.size());
    }
}

TEST(qmsets, projection) {
    const Attribute chi_bc = Attribute::characteristic(ket(U, {"b", "c"}));
    const Attribute chi_ab = Attribute::characteristic(ket(U, {"a", "b"}));
    const Ket bc = project(chi_bc, 1, Ket::all(U));
    EXPECT_EQ(bc, ket(U, {"b", "c"}));
    EXPECT_EQ(project(chi_bc, 1, bc), bc);
    EXPECT_EQ(project(chi_ab, 0, bc), ket(U, {"c"}));
    EXPECT_TRUE(project(chi_ab, 5, bc).is_empty());
    // After projecting, the same attribute is certain.
    EXPECT_EQ(born(chi_ab, project(chi_ab, 0, bc)), (std::map<Rational, Rational>{{0, 1}}));
}

TEST(qmsets, inverse_image_partition) {
    const auto p = attr(U, {2, 1, 2}).inverse_image_partition();
    EXPECT_EQ(p, SetPartition::make({{0, 2}, {1}}, 3));
    EXPECT_EQ(attr(U, {1, 2, 3}).spectrum(), (std::vector<Rational>{1, 2, 3}));
}
