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

#include "mielab/pauli_gf2/pauli_string.h"

#include <bit>

#include "mielab/errors.h"

namespace mielab {

PauliString PauliString::from_str(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    p.phase = phase;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.xs.set(q, true);
                break;
            case 'Y':
                p.xs.set(q, true);
                p.zs.set(q, true);
                break;
            case 'Z':
                p.zs.set(q, true);
                break;
            default:
                throw std::invalid_argument("not a Pauli string: " + std::string(text));
        }
    }
    return p;
}

PauliString PauliString::single(size_t n, size_t qubit, char pauli) {
    if (qubit >= n) {
        throw std::out_of_range("qubit index out of range");
    }
    if (pauli != 'X' && pauli != 'Y' && pauli != 'Z') {
        throw std::invalid_argument("single-qubit Pauli must be X, Y or Z");
    }
    PauliString p(n);
    p.xs.set(qubit, pauli == 'X' || pauli == 'Y');
    p.zs.set(qubit, pauli == 'Z' || pauli == 'Y');
    return p;
}

char PauliString::pauli_char(size_t q) const {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    return kChars[xs[q] | (zs[q] << 1)];
}

PauliString PauliString::inverse() const {
    PauliString r = *this;
    r.phase = (4 - phase) & 3;
    return r;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase & 3];
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back(pauli_char(q));
    }
    return out;
}

uint8_t product_phase_words(std::span<const uint64_t> x1, std::span<const uint64_t> z1,
                            std::span<const uint64_t> x2, std::span<const uint64_t> z2) {
    int plus = 0;
    int minus = 0;
    for (size_t k = 0; k < x1.size(); k++) {
        uint64_t a = x1[k], b = z1[k], c = x2[k], d = z2[k];
        uint64_t p = (a & ~b & c & d) | (~a & b & c & ~d) | (a & b & ~c & d);
        uint64_t m = (a & ~b & ~c & d) | (~a & b & c & d) | (a & b & c & ~d);
        plus += std::popcount(p);
        minus += std::popcount(m);
    }
    return static_cast<uint8_t>((plus - minus) & 3);
}

PauliString pauli_mul(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli strings act on different qubit counts");
    }
    PauliString r = p;
    r.phase = (p.phase + q.phase + product_phase_words(p.xs.words(), p.zs.words(), q.xs.words(), q.zs.words())) & 3;
    r.xs ^= q.xs;
    r.zs ^= q.zs;
    return r;
}

bool pauli_commutes(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli strings act on different qubit counts");
    }
    auto px = p.xs.words(), pz = p.zs.words(), qx = q.xs.words(), qz = q.zs.words();
    uint64_t acc = 0;
    for (size_t k = 0; k < px.size(); k++) {
        acc ^= (px[k] & qz[k]) ^ (pz[k] & qx[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

}  // namespace mielab
