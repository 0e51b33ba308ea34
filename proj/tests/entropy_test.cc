// Copyright 2026 The mielab Authors
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

#include <gtest/gtest.h>

#include <random>

#include "mielab/stabilizer_engine/entropy.h"
#include "mielab/stabilizer_engine/nested_observables.h"
#include "mielab/stabilizer_engine/random_states.h"
#include "mielab/stabilizer_engine/tableau.h"

using namespace mielab;

namespace {

Tableau from_texts(std::initializer_list<const char *> texts) {
    std::vector<PauliString> gens;
    for (const char *t : texts) {
        gens.push_back(PauliString::from_str(t));
    }
    return Tableau::from_stabilizers(gens);
}

Tableau cluster_ring(size_t n) {
    std::vector<PauliString> gens;
    for (size_t i = 0; i < n; i++) {
        PauliString g(n);
        g.xs.set(i, true);
        g.zs.set((i + 1) % n, true);
        g.xs.set((i + 2) % n, true);
        gens.push_back(g);
    }
    return Tableau::from_stabilizers(gens);
}

}  // namespace

TEST(entropy, examples) {
    Tableau epr = from_texts({"XX", "ZZ"});
    EXPECT_EQ(entropy_bits(epr, {0}), 1u);
    Tableau ghz = from_texts({"XXX", "ZZI", "IZZ"});
    EXPECT_EQ(entropy_bits(ghz, {0, 1}), 1u);
    Tableau zero(2);
    EXPECT_EQ(entropy_bits(zero, {0}), 0u);
    EXPECT_EQ(entropy_bits(zero, {0, 1}), 0u);
    EXPECT_EQ(entropy_bits(zero, {}), 0u);
}

TEST(entropy, mutual_information_examples) {
    Tableau ghz = from_texts({"XXX", "ZZI", "IZZ"});
    EXPECT_EQ(mutual_information_bits(ghz, {0}, {1}), 1u);
    Tableau epr = from_texts({"XX", "ZZ"});
    EXPECT_EQ(mutual_information_bits(epr, {0}, {1}), 2u);
    EXPECT_EQ(mutual_information_bits(Tableau::plus_state(4), {0, 1}, {3}), 0u);
    EXPECT_THROW(mutual_information_bits(ghz, {0, 1}, {1}), std::invalid_argument);
}

TEST(entropy, mie_examples) {
    Tableau ghz = from_texts({"XXX", "ZZI", "IZZ"});
    Tableau ghz_prime = from_texts({"ZZZ", "XXI", "IXX"});
    for (uint64_t seed = 0; seed < 8; seed++) {
        EXPECT_EQ(mie_bits(ghz, {0}, {1}, Basis::Z, seed), 0u);
        EXPECT_EQ(mie_bits(ghz_prime, {0}, {1}, Basis::Z, seed), 1u);
    }
    EXPECT_EQ(mie_bits_elimination(ghz, {0}, {1}, Basis::Z), 0u);
    EXPECT_EQ(mie_bits_elimination(ghz_prime, {0}, {1}, Basis::Z), 1u);
    EXPECT_EQ(mie_bits_elimination(ghz, {0}, {1}, Basis::X), 1u);
    EXPECT_THROW(mie_bits(ghz, {0}, {0}, Basis::Z), std::invalid_argument);

    for (size_t n : {4u, 6u, 8u, 12u, 20u}) {
        Tableau cluster = cluster_ring(n);
        for (size_t sep = 2; sep <= n / 2; sep += 2) {
            EXPECT_EQ(mie_bits(cluster, {0}, {sep}, Basis::Z), 1u) << n << " " << sep;
            EXPECT_EQ(mie_bits_elimination(cluster, {0}, {sep}, Basis::Z), 1u);
        }
    }
}

TEST(entropy, outcome_independence) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 4 + rng() % 40;
        Tableau t = random_stabilizer_state(n, 6 * n, rng());
        auto part = random_tripartition(n, rng);
        for (Basis basis : {Basis::Z, Basis::X}) {
            size_t first = mie_bits(t, part.a, part.b, basis, 0);
            for (uint64_t seed = 1; seed < 100; seed++) {
                ASSERT_EQ(mie_bits(t, part.a, part.b, basis, seed), first);
            }
            ASSERT_EQ(mie_bits_elimination(t, part.a, part.b, basis), first);
        }
    }
}

TEST(entropy, pure_state_and_bound_properties) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 2 + rng() % 70;
        Tableau t = random_stabilizer_state(n, 5 * n, rng());
        auto part = random_tripartition(n, rng);
        Region ab = region_union(part.a, part.b);
        ASSERT_EQ(entropy_bits(t, part.a), entropy_bits(t, complement(part.a, {}, n)));
        ASSERT_EQ(entropy_bits(t, ab), entropy_bits(t, part.c));
        for (Basis basis : {Basis::Z, Basis::X}) {
            size_t mie = mie_bits_elimination(t, part.a, part.b, basis);
            ASSERT_LE(mie, std::min(part.a.size(), part.b.size()));
            ASSERT_EQ(mie, mie_bits(t, part.a, part.b, basis, trial));
        }
    }
}

TEST(regions, helpers) {
    EXPECT_EQ(make_region({3, 1, 2}, 4), (Region{1, 2, 3}));
    EXPECT_THROW(make_region({1, 1}, 4), std::invalid_argument);
    EXPECT_THROW(make_region({4}, 4), std::invalid_argument);
    EXPECT_EQ(ring_interval(6, 4, 8), (Region{0, 1, 6, 7}));
    EXPECT_EQ(complement({0, 1}, {4}, 6), (Region{2, 3, 5}));
}

TEST(nested, matches_direct_computation) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 8 + rng() % 120;
        Tableau t = (trial % 2) ? random_stabilizer_state(n, 5 * n, rng()) : random_css_state(n, 5 * n, rng());
        size_t x1 = rng() % n;
        size_t x3 = (x1 + n / 2 + rng() % 3) % n;
        std::vector<Region> a_chain, b_chain;
        for (size_t len = 1 + rng() % 2; len <= n / 4; len += 1 + rng() % 3) {
            a_chain.push_back(ring_interval(x1, len, n));
            b_chain.push_back(ring_interval(x3, len, n));
        }
        auto mi = nested_mutual_information_bits(t, a_chain, b_chain);
        auto sa = nested_entropy_bits(t, a_chain);
        auto mz = nested_mie_bits(t, a_chain, b_chain, Basis::Z);
        auto mx = nested_mie_bits(t, a_chain, b_chain, Basis::X);
        for (size_t k = 0; k < a_chain.size(); k++) {
            ASSERT_EQ(sa[k], entropy_bits(t, a_chain[k]));
            ASSERT_EQ(mi[k], mutual_information_bits(t, a_chain[k], b_chain[k]));
            ASSERT_EQ(mz[k], mie_bits(t, a_chain[k], b_chain[k], Basis::Z, trial));
            ASSERT_EQ(mx[k], mie_bits(t, a_chain[k], b_chain[k], Basis::X, trial));
        }
    }
    EXPECT_THROW(nested_entropy_bits(Tableau(4), {{0, 1}, {1, 2}}), std::invalid_argument);
}
