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

#ifndef MIELAB_PAULI_GF2_PAULI_STRING_H
#define MIELAB_PAULI_GF2_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "mielab/pauli_gf2/bit_vector.h"

namespace mielab {

/// i^phase times a tensor product of Hermitian single-qubit Paulis. Qubit q
/// carries X^x Z^z up to the Y convention: (x,z) = (1,1) denotes Y itself.
struct PauliString {
    BitVector xs;
    BitVector zs;
    uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(size_t n) : xs(n), zs(n) {
    }

    /// Parses "+XZI", "-iXYZ", "XZ" (sign optional). '_' is accepted for I.
    static PauliString from_str(std::string_view text);
    /// Single-qubit Pauli 'X', 'Y' or 'Z' on `qubit` of an n-qubit identity.
    static PauliString single(size_t n, size_t qubit, char pauli);

    size_t num_qubits() const {
        return xs.size();
    }
    bool is_identity() const {
        return xs.none() && zs.none() && phase == 0;
    }
    /// Phase 0 or 2.
    bool has_real_phase() const {
        return (phase & 1) == 0;
    }
    char pauli_char(size_t q) const;

    PauliString inverse() const;

    bool operator==(const PauliString &other) const = default;

    std::string str() const;
};

/// Phase exponent contributed by multiplying left (x1,z1) by right (x2,z2)
/// word-wise, with the Y convention above. Result mod 4.
uint8_t product_phase_words(std::span<const uint64_t> x1, std::span<const uint64_t> z1,
                            std::span<const uint64_t> x2, std::span<const uint64_t> z2);

/// Returns p·q. Throws DimensionError on size mismatch.
PauliString pauli_mul(const PauliString &p, const PauliString &q);

/// Throws DimensionError on size mismatch.
bool pauli_commutes(const PauliString &p, const PauliString &q);

}  // namespace mielab

#endif
