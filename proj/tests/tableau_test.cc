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

#include <deque>
#include <map>
#include <random>
#include <set>

#include "dense_oracle.h"
#include "mielab/errors.h"
#include "mielab/stabilizer_engine/clifford2.h"
#include "mielab/stabilizer_engine/random_states.h"
#include "mielab/stabilizer_engine/tableau.h"

using namespace mielab;

namespace {

bool group_contains(const Tableau &t, const char *text) {
    return t.peek(PauliString::from_str(text)) == +1;
}

void expect_dense_agrees(const Tableau &t, const oracle::Vec &psi) {
    for (size_t i = 0; i < t.num_qubits(); i++) {
        ASSERT_TRUE(oracle::stabilized_by(psi, t.stabilizer(i))) << t.snapshot();
    }
}

}  // namespace

TEST(tableau, initial_states) {
    Tableau zero(3);
    EXPECT_EQ(zero.snapshot(), "n=3\n+ZII\n+IZI\n+IIZ\n");
    Tableau plus = Tableau::plus_state(2);
    EXPECT_EQ(plus.snapshot(), "n=2\n+XI\n+IX\n");
    zero.check_invariants();
    plus.check_invariants();
}

TEST(tableau, gate_examples) {
    Tableau t(1);
    t.h(0);
    EXPECT_EQ(t.stabilizer(0).str(), "+X");
    t.s(0);
    EXPECT_EQ(t.stabilizer(0).str(), "+Y");

    Tableau epr(2);
    epr.h(0);
    epr.cnot(0, 1);
    EXPECT_TRUE(group_contains(epr, "XX"));
    EXPECT_TRUE(group_contains(epr, "ZZ"));
}

TEST(tableau, gate_errors) {
    Tableau t(3);
    EXPECT_THROW(t.h(3), std::out_of_range);
    EXPECT_THROW(t.cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(t.cz(0, 5), std::out_of_range);
    EXPECT_THROW(t.measure(PauliString::from_str("+iZII")), std::invalid_argument);
    EXPECT_THROW(t.measure(PauliString::from_str("ZI")), std::invalid_argument);
}

TEST(tableau, measurement_examples) {
    Tableau zero(1);
    auto r = zero.measure(PauliString::from_str("Z"));
    EXPECT_EQ(r.outcome, +1);
    EXPECT_TRUE(r.deterministic);
    EXPECT_EQ(zero.snapshot(), "n=1\n+Z\n");

    int plus = 0;
    for (uint64_t seed = 0; seed < 400; seed++) {
        Tableau t(1, seed);
        auto m = t.measure(PauliString::from_str("X"));
        EXPECT_FALSE(m.deterministic);
        EXPECT_EQ(t.stabilizer(0).str(), m.outcome > 0 ? "+X" : "-X");
        plus += m.outcome > 0;
    }
    EXPECT_GT(plus, 150);
    EXPECT_LT(plus, 250);

    Tableau epr(2);
    epr.h(0);
    epr.cnot(0, 1);
    auto zz = epr.measure(PauliString::from_str("ZZ"));
    EXPECT_EQ(zz.outcome, +1);
    EXPECT_TRUE(zz.deterministic);
}

TEST(tableau, forced_outcomes) {
    Tableau t(2);
    t.measure_forced(PauliString::from_str("XI"), -1);
    EXPECT_EQ(t.stabilizer(0).str(), "-XI");
    EXPECT_THROW(t.measure_forced(PauliString::from_str("XI"), 0), std::invalid_argument);
}

TEST(tableau, random_gates_match_dense_simulation) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng() % 6;
        Tableau t(n, rng());
        oracle::Vec psi = oracle::basis_state(n, 0);
        for (int step = 0; step < 40; step++) {
            size_t a = rng() % n;
            size_t b = (a + 1 + rng() % std::max<size_t>(n - 1, 1)) % n;
            int op = rng() % 8;
            if (n == 1 && op >= 4 && op <= 5) {
                op = 0;
            }
            switch (op) {
                case 0:
                    t.h(a);
                    oracle::h(psi, a);
                    break;
                case 1:
                    t.s(a);
                    oracle::s(psi, a);
                    break;
                case 2:
                    t.x(a);
                    oracle::x(psi, a);
                    break;
                case 3:
                    t.z(a);
                    oracle::z(psi, a);
                    break;
                case 4:
                    t.cnot(a, b);
                    oracle::cnot(psi, a, b);
                    break;
                case 5:
                    t.cz(a, b);
                    oracle::cz(psi, a, b);
                    break;
                default: {
                    PauliString p(n);
                    for (size_t q = 0; q < n; q++) {
                        p.xs.set(q, rng() % 3 == 0);
                        p.zs.set(q, rng() % 3 == 0);
                    }
                    p.phase = (rng() & 1) ? 2 : 0;
                    if (p.xs.none() && p.zs.none()) {
                        break;
                    }
                    double p_plus = (oracle::apply_pauli(p, psi).dot(psi)).real();
                    auto m = t.measure(p);
                    double prob = oracle::project(psi, p, m.outcome);
                    if (m.deterministic) {
                        ASSERT_NEAR(prob, 1.0, 1e-9);
                        ASSERT_NEAR(std::abs(p_plus), 1.0, 1e-9);
                    } else {
                        ASSERT_NEAR(prob, 0.5, 1e-9);
                    }
                    break;
                }
            }
            t.check_invariants();
            expect_dense_agrees(t, psi);
        }
    }
}

TEST(tableau, from_stabilizers_round_trip) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        Tableau t = random_stabilizer_state(2 + seed % 30, 200, seed);
        Tableau u = Tableau::from_stabilizers(t.stabilizers());
        u.check_invariants();
        EXPECT_EQ(u.stabilizers(), t.stabilizers());
    }
    EXPECT_THROW(Tableau::from_stabilizers({PauliString::from_str("XI"), PauliString::from_str("ZI")}),
                 std::invalid_argument);
    EXPECT_THROW(Tableau::from_stabilizers({PauliString::from_str("XI"), PauliString::from_str("XI")}),
                 std::invalid_argument);
}

TEST(tableau, deterministic_replay) {
    Tableau a = random_stabilizer_state(40, 2000, 99);
    Tableau b = random_stabilizer_state(40, 2000, 99);
    EXPECT_TRUE(a == b);
    EXPECT_EQ(a.snapshot(), b.snapshot());
    Tableau c = random_stabilizer_state(40, 2000, 100);
    EXPECT_FALSE(a == c);
}

TEST(tableau, invariants_hold_on_large_random_states) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Tableau t = random_stabilizer_state(150, 3000, seed);
        t.check_invariants();
    }
}

namespace {

// Conjugation action of a 4x4 unitary on the 16 two-qubit Pauli patterns,
// found by matching U P U^dagger against +-P_w.
Clifford2Action dense_action(const Eigen::Matrix4cd &u) {
    auto pauli_matrix = [](uint32_t v) {
        PauliString p(2);
        p.xs.set(0, v & 1);
        p.zs.set(0, (v >> 1) & 1);
        p.xs.set(1, (v >> 2) & 1);
        p.zs.set(1, (v >> 3) & 1);
        Eigen::Matrix4cd m;
        for (uint64_t s = 0; s < 4; s++) {
            m.col(s) = oracle::apply_pauli(p, oracle::basis_state(2, s));
        }
        return m;
    };
    Clifford2Action act{};
    for (uint32_t v = 0; v < 16; v++) {
        Eigen::Matrix4cd img = u * pauli_matrix(v) * u.adjoint();
        bool found = false;
        for (uint32_t w = 0; w < 16 && !found; w++) {
            Eigen::Matrix4cd pw = pauli_matrix(w);
            if ((img - pw).norm() < 1e-9) {
                act[v] = w;
                found = true;
            } else if ((img + pw).norm() < 1e-9) {
                act[v] = w | 16;
                found = true;
            }
        }
        EXPECT_TRUE(found);
    }
    return act;
}

Clifford2Action compose(const Clifford2Action &outer, const Clifford2Action &inner) {
    Clifford2Action out{};
    for (uint32_t v = 0; v < 16; v++) {
        uint8_t mid = inner[v];
        uint8_t fin = outer[mid & 15];
        out[v] = (fin & 15) | ((mid ^ fin) & 16);
    }
    return out;
}

}  // namespace

TEST(clifford2, table_equals_group_generated_by_h_s_cnot) {
    double r = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd h1, s1, id = Eigen::Matrix2cd::Identity();
    h1 << r, r, r, -r;
    s1 << 1, 0, 0, oracle::cd(0, 1);
    // basis index = bit0 (qubit a) + 2 bit1 (qubit b): kron(b, a)
    auto kron = [](const Eigen::Matrix2cd &b, const Eigen::Matrix2cd &a) {
        Eigen::Matrix4cd m;
        for (int i = 0; i < 2; i++)
            for (int j = 0; j < 2; j++) m.block<2, 2>(2 * i, 2 * j) = b(i, j) * a;
        return m;
    };
    Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Zero();
    for (int s = 0; s < 4; s++) {
        int t = (s & 1) ? (s ^ 2) : s;
        cnot(t, s) = 1;
    }
    std::vector<Clifford2Action> gens = {dense_action(kron(id, h1)), dense_action(kron(h1, id)),
                                         dense_action(kron(id, s1)), dense_action(kron(s1, id)),
                                         dense_action(cnot)};

    Clifford2Action identity{};
    for (uint32_t v = 0; v < 16; v++) {
        identity[v] = v;
    }
    std::set<Clifford2Action> seen = {identity};
    std::deque<Clifford2Action> frontier = {identity};
    while (!frontier.empty()) {
        Clifford2Action cur = frontier.front();
        frontier.pop_front();
        for (const auto &g : gens) {
            Clifford2Action next = compose(g, cur);
            if (seen.insert(next).second) {
                frontier.push_back(next);
            }
        }
    }
    ASSERT_EQ(seen.size(), kNumClifford2);

    const auto &table = clifford2_table();
    ASSERT_EQ(table.size(), kNumClifford2);
    std::set<Clifford2Action> ours(table.begin(), table.end());
    EXPECT_EQ(ours.size(), kNumClifford2);
    EXPECT_TRUE(ours == seen);
}

TEST(clifford2, tableau_application_matches_table) {
    std::mt19937_64 rng(5);
    const auto &table = clifford2_table();
    for (int trial = 0; trial < 200; trial++) {
        uint32_t idx = rng() % kNumClifford2;
        Tableau t = random_stabilizer_state(4, 30, rng());
        Tableau u = t;
        u.clifford2(idx, 2, 0);
        for (size_t i = 0; i < 4; i++) {
            PauliString before = t.stabilizer(i), after = u.stabilizer(i);
            uint32_t v = before.xs[2] | (before.zs[2] << 1) | (before.xs[0] << 2) | (before.zs[0] << 3);
            uint8_t e = table[idx][v];
            EXPECT_EQ(after.xs[2], bool(e & 1));
            EXPECT_EQ(after.zs[2], bool(e & 2));
            EXPECT_EQ(after.xs[0], bool(e & 4));
            EXPECT_EQ(after.zs[0], bool(e & 8));
            EXPECT_EQ(after.xs[1], before.xs[1]);
            EXPECT_EQ(after.phase, (before.phase + ((e & 16) ? 2 : 0)) & 3);
        }
        u.check_invariants();
    }
}

TEST(clifford2, uniform_sampling_frequency) {
    const size_t kDraws = 72000;
    std::map<uint32_t, size_t> symplectic_counts;
    std::map<std::string, size_t> x_images;
    std::mt19937_64 rng(2026);
    for (size_t k = 0; k < kDraws; k++) {
        Tableau t(2, rng());
        t.random_clifford2(0, 1);
        // Rows of a fresh tableau are X_a, X_b (destabilizers) and Z_a, Z_b.
        auto code = [](const PauliString &p) {
            return uint32_t(p.xs[0] | (p.zs[0] << 1) | (p.xs[1] << 2) | (p.zs[1] << 3));
        };
        uint32_t key = code(t.destabilizer(0)) | (code(t.stabilizer(0)) << 4) | (code(t.destabilizer(1)) << 8) |
                       (code(t.stabilizer(1)) << 12);
        symplectic_counts[key]++;
        x_images[t.destabilizer(0).str()]++;
    }
    ASSERT_EQ(symplectic_counts.size(), kNumSymplectic2);
    double expected = double(kDraws) / kNumSymplectic2;
    double chi2 = 0;
    for (auto &[key, count] : symplectic_counts) {
        chi2 += (count - expected) * (count - expected) / expected;
    }
    // 719 degrees of freedom: mean 719, standard deviation about 38.
    EXPECT_LT(chi2, 719 + 5 * 38);

    ASSERT_EQ(x_images.size(), 30u);
    expected = double(kDraws) / 30;
    chi2 = 0;
    for (auto &[key, count] : x_images) {
        chi2 += (count - expected) * (count - expected) / expected;
    }
    EXPECT_LT(chi2, 29 + 5 * 7.7);
}
