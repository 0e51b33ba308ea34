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

#include "mielab/stabilizer_engine/tableau.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mielab/errors.h"
#include "mielab/pauli_gf2/binary_matrix.h"
#include "mielab/stabilizer_engine/clifford2.h"

namespace mielab {

char basis_char(Basis b) {
    return b == Basis::Z ? 'Z' : 'X';
}

Basis parse_basis(std::string_view text) {
    if (text == "z" || text == "Z") {
        return Basis::Z;
    }
    if (text == "x" || text == "X") {
        return Basis::X;
    }
    throw std::invalid_argument("basis must be z or x, got '" + std::string(text) + "'");
}

Tableau::Tableau(size_t n, uint64_t seed)
    : n_(n), words_(words_for_bits(n)), xs_(2 * n * words_, 0), zs_(2 * n * words_, 0), phase_(2 * n, 0), rng_(seed) {
    uint64_t one = 1;
    for (size_t q = 0; q < n; q++) {
        rx(q)[q / kWordBits] |= one << (q % kWordBits);
        rz(n + q)[q / kWordBits] |= one << (q % kWordBits);
    }
}

Tableau Tableau::plus_state(size_t n, uint64_t seed) {
    Tableau t(n, seed);
    for (size_t q = 0; q < n; q++) {
        t.h(q);
    }
    return t;
}

Tableau Tableau::from_stabilizers(const std::vector<PauliString> &generators, uint64_t seed) {
    size_t n = generators.size();
    for (const auto &g : generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("need exactly n generators on n qubits");
        }
        if (!g.has_real_phase()) {
            throw std::invalid_argument("stabilizer generators must be Hermitian");
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!pauli_commutes(generators[i], generators[j])) {
                throw std::invalid_argument("stabilizer generators must commute");
            }
        }
    }

    // Solve omega(d_i, g_j) = delta_ij. Row j of M is (z_j | x_j), so
    // M d = e_i expresses the symplectic pairing with every generator.
    BinaryMatrix aug(n, 3 * n);
    for (size_t j = 0; j < n; j++) {
        for (size_t q = 0; q < n; q++) {
            aug.set(j, q, generators[j].zs[q]);
            aug.set(j, n + q, generators[j].xs[q]);
        }
        aug.set(j, 2 * n + j, true);
    }
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 0; c < 2 * n && next < n; c++) {
        size_t found = next;
        while (found < n && !aug.get(found, c)) {
            found++;
        }
        if (found == n) {
            continue;
        }
        aug.swap_rows(found, next);
        for (size_t r = 0; r < n; r++) {
            if (r != next && aug.get(r, c)) {
                aug.xor_row_into(next, r);
            }
        }
        pivots.push_back(c);
        next++;
    }
    if (pivots.size() != n) {
        throw std::invalid_argument("stabilizer generators are not independent");
    }

    std::vector<PauliString> destab(n, PauliString(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t r = 0; r < n; r++) {
            if (aug.get(r, 2 * n + i)) {
                size_t c = pivots[r];
                if (c < n) {
                    destab[i].xs.flip(c);
                } else {
                    destab[i].zs.flip(c - n);
                }
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t k = i + 1; k < n; k++) {
            if (!pauli_commutes(destab[i], destab[k])) {
                destab[k].xs ^= generators[i].xs;
                destab[k].zs ^= generators[i].zs;
            }
        }
    }

    Tableau t(n, seed);
    for (size_t i = 0; i < n; i++) {
        destab[i].phase = 0;
        t.set_row(i, destab[i]);
        t.set_row(n + i, generators[i]);
    }
    return t;
}

std::vector<PauliString> Tableau::stabilizers() const {
    std::vector<PauliString> out;
    out.reserve(n_);
    for (size_t i = 0; i < n_; i++) {
        out.push_back(stabilizer(i));
    }
    return out;
}

PauliString Tableau::row(size_t r) const {
    PauliString p(n_);
    std::copy_n(rx(r), words_, p.xs.words().begin());
    std::copy_n(rz(r), words_, p.zs.words().begin());
    p.phase = phase_[r];
    return p;
}

void Tableau::set_row(size_t r, const PauliString &p) {
    std::copy_n(p.xs.words().begin(), words_, rx(r));
    std::copy_n(p.zs.words().begin(), words_, rz(r));
    phase_[r] = p.phase & 3;
}

void Tableau::row_mul(size_t dst, size_t src) {
    uint64_t *dx = rx(dst), *dz = rz(dst);
    const uint64_t *sx = rx(src), *sz = rz(src);
    uint8_t delta = product_phase_words({dx, words_}, {dz, words_}, {sx, words_}, {sz, words_});
    phase_[dst] = (phase_[dst] + phase_[src] + delta) & 3;
    for (size_t k = 0; k < words_; k++) {
        dx[k] ^= sx[k];
        dz[k] ^= sz[k];
    }
}

void Tableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

void Tableau::h(size_t q) {
    check_qubit(q);
    size_t w = q / kWordBits;
    uint64_t m = uint64_t{1} << (q % kWordBits);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &xw = xs_[r * words_ + w];
        uint64_t &zw = zs_[r * words_ + w];
        uint64_t xb = xw & m, zb = zw & m;
        if (xb && zb) {
            phase_[r] ^= 2;
        }
        xw = (xw & ~m) | zb;
        zw = (zw & ~m) | xb;
    }
}

void Tableau::s(size_t q) {
    check_qubit(q);
    size_t w = q / kWordBits;
    uint64_t m = uint64_t{1} << (q % kWordBits);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t xb = xs_[r * words_ + w] & m;
        uint64_t &zw = zs_[r * words_ + w];
        if (xb && (zw & m)) {
            phase_[r] ^= 2;
        }
        zw ^= xb;
    }
}

void Tableau::x(size_t q) {
    check_qubit(q);
    size_t w = q / kWordBits;
    uint64_t m = uint64_t{1} << (q % kWordBits);
    for (size_t r = 0; r < 2 * n_; r++) {
        if (zs_[r * words_ + w] & m) {
            phase_[r] ^= 2;
        }
    }
}

void Tableau::z(size_t q) {
    check_qubit(q);
    size_t w = q / kWordBits;
    uint64_t m = uint64_t{1} << (q % kWordBits);
    for (size_t r = 0; r < 2 * n_; r++) {
        if (xs_[r * words_ + w] & m) {
            phase_[r] ^= 2;
        }
    }
}

void Tableau::cnot(size_t c, size_t t) {
    check_qubit(c);
    check_qubit(t);
    if (c == t) {
        throw std::invalid_argument("two-qubit gate on a repeated qubit");
    }
    size_t wc = c / kWordBits, wt = t / kWordBits;
    unsigned bc = c % kWordBits, bt = t % kWordBits;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t *xr = xs_.data() + r * words_;
        uint64_t *zr = zs_.data() + r * words_;
        uint64_t xc = (xr[wc] >> bc) & 1, zc = (zr[wc] >> bc) & 1;
        uint64_t xt = (xr[wt] >> bt) & 1, zt = (zr[wt] >> bt) & 1;
        if (xc & zt & (xt ^ zc ^ 1)) {
            phase_[r] ^= 2;
        }
        xr[wt] ^= xc << bt;
        zr[wc] ^= zt << bc;
    }
}

void Tableau::cz(size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("two-qubit gate on a repeated qubit");
    }
    size_t wa = a / kWordBits, wb = b / kWordBits;
    unsigned ba = a % kWordBits, bb = b % kWordBits;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t *xr = xs_.data() + r * words_;
        uint64_t *zr = zs_.data() + r * words_;
        uint64_t xa = (xr[wa] >> ba) & 1, za = (zr[wa] >> ba) & 1;
        uint64_t xb = (xr[wb] >> bb) & 1, zb = (zr[wb] >> bb) & 1;
        if (xa & xb & (za ^ zb)) {
            phase_[r] ^= 2;
        }
        zr[wb] ^= xa << bb;
        zr[wa] ^= xb << ba;
    }
}

void Tableau::clifford2(uint32_t index, size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("two-qubit gate on a repeated qubit");
    }
    const auto &table = clifford2_table();
    if (index >= table.size()) {
        throw std::out_of_range("two-qubit Clifford index out of range");
    }
    const Clifford2Action &act = table[index];
    size_t wa = a / kWordBits, wb = b / kWordBits;
    unsigned ba = a % kWordBits, bb = b % kWordBits;
    uint64_t ma = uint64_t{1} << ba, mb = uint64_t{1} << bb;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t *xr = xs_.data() + r * words_;
        uint64_t *zr = zs_.data() + r * words_;
        unsigned v = ((xr[wa] >> ba) & 1) | (((zr[wa] >> ba) & 1) << 1) | (((xr[wb] >> bb) & 1) << 2) |
                     (((zr[wb] >> bb) & 1) << 3);
        if (v == 0) {
            continue;
        }
        uint8_t e = act[v];
        xr[wa] = (xr[wa] & ~ma) | (uint64_t(e & 1) << ba);
        zr[wa] = (zr[wa] & ~ma) | (uint64_t((e >> 1) & 1) << ba);
        xr[wb] = (xr[wb] & ~mb) | (uint64_t((e >> 2) & 1) << bb);
        zr[wb] = (zr[wb] & ~mb) | (uint64_t((e >> 3) & 1) << bb);
        if (e & 16) {
            phase_[r] ^= 2;
        }
    }
}

void Tableau::random_clifford2(size_t a, size_t b) {
    std::uniform_int_distribution<uint32_t> pick(0, kNumClifford2 - 1);
    clifford2(pick(rng_), a, b);
}

namespace {

struct SupportWords {
    std::vector<uint32_t> index;
    std::vector<uint64_t> x;
    std::vector<uint64_t> z;
};

SupportWords support_words(const PauliString &p) {
    SupportWords s;
    auto px = p.xs.words(), pz = p.zs.words();
    for (size_t k = 0; k < px.size(); k++) {
        if (px[k] | pz[k]) {
            s.index.push_back(static_cast<uint32_t>(k));
            s.x.push_back(px[k]);
            s.z.push_back(pz[k]);
        }
    }
    return s;
}

bool anticommutes(const SupportWords &s, const uint64_t *xr, const uint64_t *zr) {
    uint64_t acc = 0;
    for (size_t j = 0; j < s.index.size(); j++) {
        uint32_t k = s.index[j];
        acc ^= (xr[k] & s.z[j]) ^ (zr[k] & s.x[j]);
    }
    return std::popcount(acc) & 1;
}

}  // namespace

int Tableau::peek(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("measured Pauli has the wrong qubit count");
    }
    if (!p.has_real_phase()) {
        throw std::invalid_argument("cannot measure a non-Hermitian Pauli");
    }
    SupportWords s = support_words(p);
    for (size_t r = n_; r < 2 * n_; r++) {
        if (anticommutes(s, rx(r), rz(r))) {
            return 0;
        }
    }
    std::vector<uint64_t> ax(words_, 0), az(words_, 0);
    uint8_t ph = 0;
    for (size_t i = 0; i < n_; i++) {
        if (anticommutes(s, rx(i), rz(i))) {
            const uint64_t *sx = rx(n_ + i), *sz = rz(n_ + i);
            ph = (ph + phase_[n_ + i] + product_phase_words(ax, az, {sx, words_}, {sz, words_})) & 3;
            for (size_t k = 0; k < words_; k++) {
                ax[k] ^= sx[k];
                az[k] ^= sz[k];
            }
        }
    }
    return ph == p.phase ? +1 : -1;
}

MeasureResult Tableau::measure_impl(const PauliString &p, int forced) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("measured Pauli has the wrong qubit count");
    }
    if (!p.has_real_phase()) {
        throw std::invalid_argument("cannot measure a non-Hermitian Pauli");
    }
    SupportWords s = support_words(p);
    size_t pivot = 2 * n_;
    for (size_t r = n_; r < 2 * n_; r++) {
        if (anticommutes(s, rx(r), rz(r))) {
            pivot = r;
            break;
        }
    }
    if (pivot == 2 * n_) {
        return {peek(p), true};
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        if (r != pivot && r != pivot - n_ && anticommutes(s, rx(r), rz(r))) {
            row_mul(r, pivot);
        }
    }
    std::copy_n(rx(pivot), words_, rx(pivot - n_));
    std::copy_n(rz(pivot), words_, rz(pivot - n_));
    phase_[pivot - n_] = phase_[pivot];

    int outcome = forced != 0 ? forced : ((rng_() >> 63) ? -1 : +1);
    set_row(pivot, p);
    if (outcome < 0) {
        phase_[pivot] ^= 2;
    }
    return {outcome, false};
}

MeasureResult Tableau::measure(const PauliString &p) {
    return measure_impl(p, 0);
}

MeasureResult Tableau::measure_forced(const PauliString &p, int forced) {
    if (forced != 1 && forced != -1) {
        throw std::invalid_argument("forced outcome must be +1 or -1");
    }
    return measure_impl(p, forced);
}

MeasureResult Tableau::measure_z(size_t q) {
    return measure(PauliString::single(n_, q, 'Z'));
}

MeasureResult Tableau::measure_x(size_t q) {
    return measure(PauliString::single(n_, q, 'X'));
}

void Tableau::check_invariants() const {
    auto omega = [&](size_t a, size_t b) {
        uint64_t acc = 0;
        for (size_t k = 0; k < words_; k++) {
            acc ^= (rx(a)[k] & rz(b)[k]) ^ (rz(a)[k] & rx(b)[k]);
        }
        return std::popcount(acc) & 1;
    };
    for (size_t i = 0; i < n_; i++) {
        if (phase_[n_ + i] & 1) {
            throw ValidationError("stabilizer " + std::to_string(i) + " has an imaginary phase");
        }
        for (size_t j = 0; j < n_; j++) {
            if (omega(n_ + i, n_ + j)) {
                throw ValidationError("stabilizers " + std::to_string(i) + "," + std::to_string(j) + " anticommute");
            }
            if (omega(i, j)) {
                throw ValidationError("destabilizers " + std::to_string(i) + "," + std::to_string(j) +
                                      " anticommute");
            }
            if (omega(i, n_ + j) != (i == j)) {
                throw ValidationError("destabilizer/stabilizer pairing broken at " + std::to_string(i) + "," +
                                      std::to_string(j));
            }
        }
    }
}

std::string Tableau::snapshot() const {
    std::ostringstream out;
    out << "n=" << n_ << "\n";
    for (size_t i = 0; i < n_; i++) {
        out << stabilizer(i).str() << "\n";
    }
    return out.str();
}

}  // namespace mielab
