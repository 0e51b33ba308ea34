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

#include "mielab/stabilizer_engine/clifford2.h"

#include "mielab/errors.h"
#include "mielab/pauli_gf2/pauli_string.h"

namespace mielab {
namespace {

int omega4(uint32_t u, uint32_t v) {
    auto bit = [](uint32_t w, int k) { return (w >> k) & 1; };
    return (bit(u, 0) & bit(v, 1)) ^ (bit(u, 1) & bit(v, 0)) ^ (bit(u, 2) & bit(v, 3)) ^ (bit(u, 3) & bit(v, 2));
}

PauliString pattern_pauli(uint32_t v) {
    PauliString p(2);
    p.xs.set(0, v & 1);
    p.zs.set(0, (v >> 1) & 1);
    p.xs.set(1, (v >> 2) & 1);
    p.zs.set(1, (v >> 3) & 1);
    return p;
}

uint32_t pauli_pattern(const PauliString &p) {
    return p.xs[0] | (p.zs[0] << 1) | (p.xs[1] << 2) | (p.zs[1] << 3);
}

std::vector<Clifford2Action> build_table() {
    std::vector<std::array<uint32_t, 4>> maps;
    for (uint32_t a = 1; a < 16; a++) {
        for (uint32_t b = 1; b < 16; b++) {
            if (!omega4(a, b)) {
                continue;
            }
            for (uint32_t c = 1; c < 16; c++) {
                if (omega4(a, c) || omega4(b, c)) {
                    continue;
                }
                for (uint32_t d = 1; d < 16; d++) {
                    if (omega4(c, d) && !omega4(a, d) && !omega4(b, d)) {
                        maps.push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    if (maps.size() != kNumSymplectic2) {
        throw ValidationError("two-qubit symplectic enumeration miscounted");
    }

    std::vector<Clifford2Action> table;
    table.reserve(kNumClifford2);
    for (const auto &images : maps) {
        for (uint32_t signs = 0; signs < 16; signs++) {
            PauliString gen[4];
            for (int g = 0; g < 4; g++) {
                gen[g] = pattern_pauli(images[g]);
                gen[g].phase = ((signs >> g) & 1) ? 2 : 0;
            }
            Clifford2Action action{};
            for (uint32_t v = 0; v < 16; v++) {
                // P_v = i^{x_a z_a + x_b z_b} X_a^{x_a} Z_a^{z_a} X_b^{x_b} Z_b^{z_b}
                PauliString img(2);
                img.phase = ((v & 1) & ((v >> 1) & 1)) + (((v >> 2) & 1) & ((v >> 3) & 1));
                for (int g = 0; g < 4; g++) {
                    if ((v >> g) & 1) {
                        img = pauli_mul(img, gen[g]);
                    }
                }
                if (!img.has_real_phase()) {
                    throw ValidationError("Clifford image of a Hermitian Pauli is not Hermitian");
                }
                action[v] = static_cast<uint8_t>(pauli_pattern(img) | (img.phase == 2 ? 16 : 0));
            }
            table.push_back(action);
        }
    }
    return table;
}

}  // namespace

const std::vector<Clifford2Action> &clifford2_table() {
    static const std::vector<Clifford2Action> table = build_table();
    return table;
}

}  // namespace mielab
