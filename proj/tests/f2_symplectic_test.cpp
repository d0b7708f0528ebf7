// Copyright 2026 The stabtest Authors
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

#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "stabtest/stabtest.hpp"

using namespace stabtest;

namespace {

PauliIndex P(const char *s) { return PauliIndex::parse(s); }

F2Subspace span_of(std::initializer_list<const char *> gens) {
    std::vector<std::string> v(gens.begin(), gens.end());
    return F2Subspace::from_strings(v);
}

}  // namespace

TEST(pauli_index, layout_and_strings) {
    PauliIndex x = P("XZIY");
    EXPECT_EQ(x.n(), 4);
    EXPECT_EQ(x.x_part(), 0b1001U);
    EXPECT_EQ(x.z_part(), 0b1010U);
    EXPECT_EQ(x.bits(), 0b1001U | (0b1010U << 4));
    EXPECT_EQ(x.str(), "XZIY");
    EXPECT_EQ(x.binary_str(), "(1001|0101)");
    EXPECT_EQ(PauliIndex::parse_binary("(1001|0101)"), x);
    EXPECT_EQ(PauliIndex::parse_binary("(11|00)"), P("XX"));
    EXPECT_TRUE(PauliIndex::identity(3).is_identity());
    EXPECT_THROW(PauliIndex::parse("XQ"), ConfigurationError);
    EXPECT_THROW(PauliIndex::parse_binary("(1|00)"), ConfigurationError);
    EXPECT_THROW(PauliIndex(1, 0b100), DimensionError);
}

TEST(pauli_index, string_round_trip_exhaustive) {
    for (int n = 1; n <= 3; ++n) {
        for (Word w = 0; w < (Word{1} << (2 * n)); ++w) {
            PauliIndex x(n, w);
            EXPECT_EQ(PauliIndex::parse(x.str()), x);
            EXPECT_EQ(PauliIndex::parse_binary(x.binary_str()), x);
        }
    }
}

TEST(symplectic_form, examples) {
    EXPECT_EQ(symplectic_form(P("X"), P("Z")), 1);
    EXPECT_EQ(symplectic_form(P("X"), P("X")), 0);
    EXPECT_EQ(symplectic_form(P("XX"), P("ZZ")), 0);
    EXPECT_EQ(symplectic_form(P("XI"), P("YZ")), 1);
    EXPECT_THROW(symplectic_form(P("X"), P("XX")), DimensionError);
}

TEST(symplectic_form, alternating_symmetric_bilinear_exhaustive) {
    for (int n = 1; n <= 3; ++n) {
        const Word len = Word{1} << (2 * n);
        for (Word x = 0; x < len; ++x) {
            EXPECT_EQ(symplectic_form(x, x, n), 0);
            for (Word y = 0; y < len; ++y) {
                EXPECT_EQ(symplectic_form(x, y, n), symplectic_form(y, x, n));
            }
        }
        // bilinearity on a sample of triples
        std::mt19937_64 rng(n);
        for (int t = 0; t < 2000; ++t) {
            Word x = rng() % len, y = rng() % len, z = rng() % len;
            EXPECT_EQ(symplectic_form(x ^ y, z, n), symplectic_form(x, z, n) ^ symplectic_form(y, z, n));
        }
    }
}

TEST(rref_basis, examples) {
    auto full = span_of({"X", "Y"});
    EXPECT_EQ(full.dim(), 2);
    EXPECT_EQ(full, F2Subspace::full(1));

    auto dup = span_of({"Z", "Z"});
    EXPECT_EQ(dup.dim(), 1);
    EXPECT_EQ(dup.to_strings(), std::vector<std::string>{"Z"});

    auto zz = span_of({"ZI", "IZ"});
    EXPECT_TRUE(zz.contains(P("ZZ")));
    EXPECT_FALSE(zz.contains(P("XI")));

    EXPECT_EQ(F2Subspace::span(2, std::vector<Word>{}).dim(), 0);
}

TEST(rref_basis, canonical_for_equal_spans) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 6;
        auto s = oracle::random_subspace(n, rng);
        // a different generating set of the same span
        std::vector<Word> gens;
        auto elems = s.elements();
        for (int i = 0; i < 3 * n; ++i) {
            gens.push_back(elems[rng() % elems.size()]);
        }
        for (Word b : s.basis()) {
            gens.push_back(b ^ elems[rng() % elems.size()]);
        }
        auto t = F2Subspace::span(n, gens);
        if (t.dim() == s.dim()) {
            EXPECT_EQ(t.basis(), s.basis());
        } else {
            EXPECT_TRUE(s.contains(t));
        }
        for (Word e : elems) {
            EXPECT_TRUE(s.contains(e));
        }
    }
}

TEST(symplectic_complement, double_complement_and_orthogonality) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 6;
        auto s = oracle::random_subspace(n, rng);
        auto c = s.symplectic_complement();
        EXPECT_EQ(c.dim() + s.dim(), 2 * n);
        for (Word a : s.basis()) {
            for (Word b : c.basis()) {
                EXPECT_EQ(symplectic_form(a, b, n), 0);
            }
        }
        EXPECT_EQ(c.symplectic_complement(), s);
    }
}

TEST(bit_matrix, inverse_and_transpose) {
    std::mt19937_64 rng(3);
    int invertible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + trial % 12;
        std::vector<Word> rows(d);
        for (auto &r : rows) {
            r = rng() & f2::low_mask(d);
        }
        f2::BitMatrix m(d, rows);
        EXPECT_EQ(m.transpose().transpose(), m);
        if (auto inv = m.inverse()) {
            ++invertible;
            EXPECT_EQ(m * *inv, f2::BitMatrix::identity(d));
            EXPECT_EQ(*inv * m, f2::BitMatrix::identity(d));
        } else {
            EXPECT_LT(f2::rank(rows), static_cast<std::size_t>(d));
        }
    }
    EXPECT_GT(invertible, 20);
}

TEST(symplectic_gram_schmidt, examples) {
    auto zz = symplectic_gram_schmidt(span_of({"ZI", "IZ"}));
    EXPECT_EQ(zz.pairs.size(), 0U);
    EXPECT_EQ(zz.residual.size(), 2U);

    auto xz = symplectic_gram_schmidt(span_of({"X", "Z"}));
    EXPECT_EQ(xz.pairs.size(), 1U);
    EXPECT_EQ(xz.residual.size(), 0U);

    auto mixed = symplectic_gram_schmidt(span_of({"XX", "ZI"}));
    EXPECT_EQ(mixed.pairs.size(), 1U);
    EXPECT_EQ(mixed.residual.size(), 0U);
}

TEST(symplectic_gram_schmidt, random_subspaces_map_onto_canonical_span) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + trial % 6;
        auto v = oracle::random_subspace(n, rng);
        auto gs = symplectic_gram_schmidt(v);
        const int k = static_cast<int>(gs.pairs.size());
        const int m = static_cast<int>(gs.residual.size());
        ASSERT_EQ(2 * k + m, v.dim());
        ASSERT_LE(k + m, n);
        EXPECT_TRUE(gs.map.preserves_form());
        for (int i = 0; i < k; ++i) {
            EXPECT_EQ(symplectic_form(gs.pairs[i].first, gs.pairs[i].second), 1);
            EXPECT_EQ(gs.map.apply(gs.pairs[i].first), PauliIndex::z_on(n, i));
            EXPECT_EQ(gs.map.apply(gs.pairs[i].second), PauliIndex::x_on(n, i));
        }
        for (int j = 0; j < m; ++j) {
            EXPECT_EQ(gs.map.apply(gs.residual[j]), PauliIndex::z_on(n, k + j));
        }
        const auto target = canonical_span(n, k, m);
        for (Word g : v.basis()) {
            EXPECT_TRUE(target.contains(gs.map.apply(g)));
        }
        EXPECT_EQ(gs.map.apply(v), target);
    }
}

TEST(symplectic_map, form_matrix_identity_matches_pairwise_check) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 5;
        auto u = symplectic_gram_schmidt(oracle::random_subspace(n, rng)).map;
        for (Word x = 0; x < (Word{1} << (2 * n)); x += 1 + rng() % 5) {
            for (Word y = 0; y < (Word{1} << (2 * n)); y += 1 + rng() % 7) {
                EXPECT_EQ(symplectic_form(u.apply(x), u.apply(y), n), symplectic_form(x, y, n));
            }
        }
        EXPECT_EQ(u.inverse().inverse(), u);
    }
    // a non-symplectic invertible matrix is rejected
    f2::BitMatrix swap_x(4, {0b0010, 0b0001, 0b0100, 0b1000});
    EXPECT_THROW(SymplecticMap(2, swap_x), InternalConsistencyError);
}

TEST(complete_to_lagrangian, examples) {
    EXPECT_EQ(complete_to_lagrangian(span_of({"ZI"})), span_of({"ZI", "IZ"}));
    auto lag = span_of({"XX", "ZZ"});
    EXPECT_EQ(complete_to_lagrangian(lag), lag);
    EXPECT_EQ(complete_to_lagrangian(F2Subspace::zero(1)), span_of({"Z"}));
    // no single-qubit label commutes with YY
    auto yy = complete_to_lagrangian(span_of({"YY"}));
    EXPECT_TRUE(yy.is_lagrangian());
    EXPECT_TRUE(yy.contains(P("YY")));
    EXPECT_THROW(complete_to_lagrangian(span_of({"X", "Z"})), PreconditionError);
}

TEST(complete_to_lagrangian, random_isotropic_superspaces) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 6;
        auto s = oracle::random_isotropic(n, rng);
        ASSERT_TRUE(s.is_isotropic());
        auto t = complete_to_lagrangian(s);
        EXPECT_TRUE(t.is_lagrangian());
        EXPECT_TRUE(t.contains(s));
        EXPECT_EQ(complete_to_lagrangian(s), t);
    }
}

TEST(enumerate_lagrangians, n1_is_x_y_z) {
    auto all = enumerate_lagrangians(1);
    std::set<F2Subspace> got(all.begin(), all.end());
    std::set<F2Subspace> want{span_of({"X"}), span_of({"Y"}), span_of({"Z"})};
    EXPECT_EQ(got, want);
}

TEST(enumerate_lagrangians, counts_distinct_and_lagrangian) {
    const std::uint64_t expected[] = {1, 3, 15, 135, 2295};
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(lagrangian_count(n), expected[n]);
        auto all = enumerate_lagrangians(n);
        std::set<F2Subspace> distinct(all.begin(), all.end());
        EXPECT_EQ(all.size(), expected[n]) << "n=" << n;
        EXPECT_EQ(distinct.size(), all.size());
        for (const auto &t : all) {
            EXPECT_TRUE(t.is_lagrangian());
        }
    }
}

TEST(enumerate_lagrangians, brute_force_agreement_n2) {
    // every 2-dimensional isotropic span of pairs of vectors at n=2
    std::set<F2Subspace> brute;
    for (Word x = 1; x < 16; ++x) {
        for (Word y = 1; y < 16; ++y) {
            auto s = F2Subspace::span(2, std::vector<Word>{x, y});
            if (s.is_lagrangian()) {
                brute.insert(s);
            }
        }
    }
    auto all = enumerate_lagrangians(2);
    EXPECT_EQ(std::set<F2Subspace>(all.begin(), all.end()), brute);
}

TEST(enumerate_lagrangians, deterministic_stream_and_cap) {
    LagrangianEnumerator a(3);
    LagrangianEnumerator b(3);
    while (auto x = a.next()) {
        auto y = b.next();
        ASSERT_TRUE(y.has_value());
        EXPECT_EQ(*x, *y);
    }
    EXPECT_FALSE(b.next().has_value());
    EXPECT_THROW(LagrangianEnumerator(7), ResourceGuardError);
    ResourceCaps small;
    small.enumeration = 2;
    EXPECT_THROW(LagrangianEnumerator(3, small), ResourceGuardError);
}
