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

#include "mielab/errors.h"
#include "mielab/pauli_gf2/binary_matrix.h"
#include "mielab/pauli_gf2/pauli_string.h"

using namespace mielab;

namespace {

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.xs.set(q, rng() & 1);
        p.zs.set(q, rng() & 1);
    }
    p.phase = rng() & 3;
    return p;
}

BinaryMatrix random_matrix(size_t rows, size_t cols, std::mt19937_64 &rng) {
    BinaryMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, (rng() % 3) == 0);
        }
    }
    return m;
}

}  // namespace

TEST(pauli_string, single_qubit_products) {
    auto X = PauliString::from_str("X");
    auto Z = PauliString::from_str("Z");
    EXPECT_EQ(pauli_mul(X, Z).str(), "-iY");
    EXPECT_EQ(pauli_mul(Z, X).str(), "+iY");
    EXPECT_TRUE(pauli_mul(X, X).is_identity());
    EXPECT_EQ(pauli_mul(PauliString::from_str("Y"), PauliString::from_str("Y")).str(), "+I");
    EXPECT_EQ(pauli_mul(PauliString::from_str("X"), PauliString::from_str("Y")).str(), "+iZ");
    EXPECT_EQ(pauli_mul(PauliString::from_str("Y"), PauliString::from_str("Z")).str(), "+iX");
}

TEST(pauli_string, commutation_examples) {
    EXPECT_FALSE(pauli_commutes(PauliString::from_str("X"), PauliString::from_str("Z")));
    EXPECT_TRUE(pauli_commutes(PauliString::from_str("X"), PauliString::from_str("X")));
    EXPECT_TRUE(pauli_commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")));
}

TEST(pauli_string, text_round_trip) {
    for (const char *text : {"+XZI", "-XZI", "+iXYZ", "-iIIY", "+"}) {
        EXPECT_EQ(PauliString::from_str(text).str(), text);
    }
    EXPECT_EQ(PauliString::from_str("XZ").str(), "+XZ");
    EXPECT_THROW(PauliString::from_str("+XQ"), std::invalid_argument);
}

TEST(pauli_string, size_mismatch_throws) {
    EXPECT_THROW(pauli_mul(PauliString(2), PauliString(3)), DimensionError);
    EXPECT_THROW(pauli_commutes(PauliString(2), PauliString(3)), DimensionError);
}

TEST(pauli_string, group_properties_randomized) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10000; trial++) {
        size_t n = 1 + rng() % 130;
        auto p = random_pauli(n, rng);
        auto q = random_pauli(n, rng);
        auto r = random_pauli(n, rng);
        ASSERT_EQ(pauli_mul(pauli_mul(p, q), r), pauli_mul(p, pauli_mul(q, r)));
        ASSERT_TRUE(pauli_mul(p, p.inverse()).is_identity());
        bool same_phase = pauli_mul(p, q).phase == pauli_mul(q, p).phase;
        ASSERT_EQ(pauli_commutes(p, q), same_phase);
    }
}

TEST(binary_matrix, rank_examples) {
    EXPECT_EQ(gf2_rank(BinaryMatrix::identity(3)), 3u);
    EXPECT_EQ(gf2_rank(BinaryMatrix(3, 3)), 0u);
    EXPECT_EQ(gf2_rank(BinaryMatrix::from_strings({"110", "011", "101"})), 2u);
}

TEST(binary_matrix, rank_leaves_input_untouched) {
    auto m = BinaryMatrix::from_strings({"110", "011", "101"});
    auto copy = m;
    gf2_rank(m);
    EXPECT_EQ(m, copy);
}

TEST(binary_matrix, in_span_examples) {
    auto rows = BinaryMatrix::from_strings({"110", "011"});
    EXPECT_TRUE(gf2_in_span(rows, BitVector(3)));
    EXPECT_TRUE(gf2_in_span(rows, BitVector::from_string("101")));
    EXPECT_FALSE(gf2_in_span(BinaryMatrix::from_strings({"110"}), BitVector::from_string("011")));
    EXPECT_THROW(gf2_in_span(rows, BitVector(4)), DimensionError);
}

TEST(binary_matrix, rank_invariant_under_row_operations) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; trial++) {
        size_t rows = 1 + rng() % 40, cols = 1 + rng() % 150;
        auto m = random_matrix(rows, cols, rng);
        size_t r0 = gf2_rank(m);
        ASSERT_LE(r0, std::min(rows, cols));
        for (int op = 0; op < 50; op++) {
            size_t a = rng() % rows, b = rng() % rows;
            if (rng() & 1) {
                m.swap_rows(a, b);
            } else if (a != b) {
                m.xor_row_into(a, b);
            }
        }
        ASSERT_EQ(gf2_rank(m), r0);
    }
}

TEST(binary_matrix, in_span_consistent_with_rank) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; trial++) {
        size_t rows = 1 + rng() % 20, cols = 1 + rng() % 70;
        auto m = random_matrix(rows, cols, rng);
        BitVector v(cols);
        if (rng() & 1) {
            for (size_t r = 0; r < rows; r++) {
                if (rng() & 1) {
                    v ^= m.row_vector(r);
                }
            }
        } else {
            for (size_t c = 0; c < cols; c++) {
                v.set(c, rng() & 1);
            }
        }
        auto grown = m;
        grown.append_row(v);
        ASSERT_EQ(gf2_in_span(m, v), gf2_rank(grown) == gf2_rank(m));
    }
}
