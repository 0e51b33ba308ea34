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

#ifndef MIELAB_STABILIZER_ENGINE_TABLEAU_H
#define MIELAB_STABILIZER_ENGINE_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mielab/pauli_gf2/pauli_string.h"

namespace mielab {

enum class Basis { Z, X };

char basis_char(Basis b);
/// Accepts "z", "Z", "x", "X".
Basis parse_basis(std::string_view text);

struct MeasureResult {
    int outcome;  // +1 or -1
    bool deterministic;
};

/// Pure stabilizer state on n qubits, stored as 2n packed rows: rows [0, n)
/// are destabilizers, rows [n, 2n) stabilizers. Destabilizer i anticommutes
/// with stabilizer i and commutes with every other row of the opposite half.
class Tableau {
   public:
    /// |0...0> with an outcome generator seeded by `seed`.
    explicit Tableau(size_t n, uint64_t seed = 0);
    static Tableau plus_state(size_t n, uint64_t seed = 0);
    /// Builds a tableau from n independent, commuting, Hermitian generators.
    /// Throws std::invalid_argument if they are not.
    static Tableau from_stabilizers(const std::vector<PauliString> &generators, uint64_t seed = 0);

    size_t num_qubits() const {
        return n_;
    }
    size_t num_words() const {
        return words_;
    }

    PauliString stabilizer(size_t i) const {
        return row(n_ + i);
    }
    PauliString destabilizer(size_t i) const {
        return row(i);
    }
    std::vector<PauliString> stabilizers() const;

    /// Raw packed access to stabilizer i.
    std::span<const uint64_t> stab_x(size_t i) const {
        return {xs_.data() + (n_ + i) * words_, words_};
    }
    std::span<const uint64_t> stab_z(size_t i) const {
        return {zs_.data() + (n_ + i) * words_, words_};
    }
    uint8_t stab_phase(size_t i) const {
        return phase_[n_ + i];
    }

    void h(size_t q);
    void s(size_t q);
    void x(size_t q);
    void z(size_t q);
    void cnot(size_t control, size_t target);
    void cz(size_t a, size_t b);
    /// Applies element `index` of the two-qubit Clifford table to (a, b).
    void clifford2(uint32_t index, size_t a, size_t b);
    /// Uniform draw from the 11520-element two-qubit Clifford group (mod phase).
    void random_clifford2(size_t a, size_t b);

    /// Measures a Hermitian Pauli. Random outcomes use the internal generator.
    /// Throws std::invalid_argument on an imaginary phase or size mismatch.
    MeasureResult measure(const PauliString &p);
    /// Same, with the outcome of a random measurement forced to `forced` (+1/-1).
    /// A deterministic measurement ignores `forced`.
    MeasureResult measure_forced(const PauliString &p, int forced);
    MeasureResult measure_z(size_t q);
    MeasureResult measure_x(size_t q);

    /// +1/-1 if p (up to sign) is in the stabilizer group, 0 otherwise. Leaves
    /// the state untouched.
    int peek(const PauliString &p) const;

    /// Throws ValidationError on broken commutation relations or a non-real
    /// stabilizer phase.
    void check_invariants() const;

    /// "n=<count>" followed by one stabilizer per line.
    std::string snapshot() const;

    std::mt19937_64 &rng() {
        return rng_;
    }
    void reseed(uint64_t seed) {
        rng_.seed(seed);
    }

    bool operator==(const Tableau &other) const {
        return n_ == other.n_ && xs_ == other.xs_ && zs_ == other.zs_ && phase_ == other.phase_;
    }

   private:
    PauliString row(size_t r) const;
    void set_row(size_t r, const PauliString &p);
    uint64_t *rx(size_t r) {
        return xs_.data() + r * words_;
    }
    uint64_t *rz(size_t r) {
        return zs_.data() + r * words_;
    }
    const uint64_t *rx(size_t r) const {
        return xs_.data() + r * words_;
    }
    const uint64_t *rz(size_t r) const {
        return zs_.data() + r * words_;
    }
    /// row dst <- row dst * row src.
    void row_mul(size_t dst, size_t src);
    void check_qubit(size_t q) const;
    MeasureResult measure_impl(const PauliString &p, int forced);

    size_t n_;
    size_t words_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> phase_;
    std::mt19937_64 rng_;
};

}  // namespace mielab

#endif
