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

#ifndef MIELAB_STABILIZER_ENGINE_CLIFFORD2_H
#define MIELAB_STABILIZER_ENGINE_CLIFFORD2_H

#include <array>
#include <cstdint>
#include <vector>

namespace mielab {

inline constexpr uint32_t kNumSymplectic2 = 720;
inline constexpr uint32_t kNumClifford2 = kNumSymplectic2 * 16;

/// Two-qubit Pauli patterns are 4-bit codes: bit 0 = x_a, bit 1 = z_a,
/// bit 2 = x_b, bit 3 = z_b, always denoting the Hermitian Pauli.
///
/// Conjugation action of one Clifford element: entry v holds the image
/// pattern of P_v in bits 0..3 and a sign flip in bit 4.
using Clifford2Action = std::array<uint8_t, 16>;

/// All 11520 elements. Element index = symplectic index * 16 + sign bits,
/// where sign bit g negates the image of generator g in (X_a, Z_a, X_b, Z_b).
const std::vector<Clifford2Action> &clifford2_table();

inline uint32_t clifford2_symplectic_index(uint32_t element) {
    return element / 16;
}

}  // namespace mielab

#endif
