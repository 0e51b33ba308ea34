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

#include "mielab/statevector_lab/dense_state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mielab/errors.h"

namespace mielab {

namespace {

size_t checked_dim(size_t d, size_t n) {
    if (d < 2 || d > 3) {
        throw DimensionError("local dimension must be 2 or 3");
    }
    size_t dim = 1;
    for (size_t k = 0; k < n; k++) {
        dim *= d;
        if (dim > kMaxDenseDim) {
            throw DimensionError("dense state of " + std::to_string(n) + " sites exceeds the 2^22 cap");
        }
    }
    return dim;
}

cplx i_pow(int k) {
    static const cplx table[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    return table[((k % 4) + 4) % 4];
}

bool is_hermitian(const Eigen::MatrixXcd &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12;
}

}  // namespace

DenseState::DenseState(size_t local_dim, size_t num_sites) : d_(local_dim), n_(num_sites) {
    amp_ = Eigen::VectorXcd::Zero(Eigen::Index(checked_dim(local_dim, num_sites)));
    amp_[0] = 1;
}

DenseState::DenseState(size_t local_dim, size_t num_sites, Eigen::VectorXcd amplitudes)
    : d_(local_dim), n_(num_sites), amp_(std::move(amplitudes)) {
    if (size_t(amp_.size()) != checked_dim(local_dim, num_sites)) {
        throw DimensionError("amplitude vector length does not match d^L");
    }
}

size_t DenseState::stride(size_t site) const {
    if (site >= n_) {
        throw std::out_of_range("site " + std::to_string(site) + " out of range");
    }
    size_t s = 1;
    for (size_t k = 0; k < site; k++) {
        s *= d_;
    }
    return s;
}

void DenseState::normalize() {
    double nrm = amp_.norm();
    if (nrm == 0) {
        throw std::runtime_error("cannot normalize the zero vector");
    }
    amp_ /= nrm;
}

void DenseState::fix_global_phase() {
    Eigen::Index best = 0;
    double best_abs = -1;
    for (Eigen::Index k = 0; k < amp_.size(); k++) {
        double a = std::abs(amp_[k]);
        if (a > best_abs + 1e-12) {
            best_abs = a;
            best = k;
        }
    }
    if (best_abs <= 0) {
        return;
    }
    amp_ *= std::conj(amp_[best]) / best_abs;
    amp_[best] = best_abs;
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix3cd potts_u() {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    for (int n = 0; n < 3; n++) {
        m(n, n) = std::polar(1.0, 2 * std::numbers::pi * n / 3);
    }
    return m;
}

Eigen::Matrix3cd potts_v() {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    for (int n = 0; n < 3; n++) {
        m((n + 1) % 3, n) = 1;
    }
    return m;
}

LocalBasis parse_local_basis(std::string_view text) {
    if (text == "z" || text == "Z") {
        return LocalBasis::Z;
    }
    if (text == "x" || text == "X") {
        return LocalBasis::X;
    }
    if (text == "u" || text == "U") {
        return LocalBasis::U;
    }
    if (text == "v" || text == "V") {
        return LocalBasis::V;
    }
    throw std::invalid_argument("unknown basis '" + std::string(text) + "' (expected z, x, u or v)");
}

char local_basis_char(LocalBasis b) {
    switch (b) {
        case LocalBasis::Z:
            return 'z';
        case LocalBasis::X:
            return 'x';
        case LocalBasis::U:
            return 'u';
        case LocalBasis::V:
            return 'v';
    }
    return '?';
}

Eigen::MatrixXcd basis_matrix(LocalBasis basis, size_t local_dim) {
    bool qubit = basis == LocalBasis::Z || basis == LocalBasis::X;
    if ((qubit && local_dim != 2) || (!qubit && local_dim != 3)) {
        throw std::invalid_argument(std::string("basis ") + local_basis_char(basis) + " does not fit local dimension " +
                                    std::to_string(local_dim));
    }
    switch (basis) {
        case LocalBasis::Z:
            return Eigen::MatrixXcd::Identity(2, 2);
        case LocalBasis::X: {
            Eigen::MatrixXcd m(2, 2);
            double r = std::sqrt(0.5);
            m << r, r, r, -r;
            return m;
        }
        case LocalBasis::U:
            return Eigen::MatrixXcd::Identity(3, 3);
        case LocalBasis::V: {
            Eigen::MatrixXcd m(3, 3);
            for (int n = 0; n < 3; n++) {
                for (int k = 0; k < 3; k++) {
                    m(n, k) = std::polar(1 / std::sqrt(3.0), 2 * std::numbers::pi * n * k / 3);
                }
            }
            return m;
        }
    }
    throw std::invalid_argument("unknown basis");
}

void apply_local(DenseState &s, const Eigen::MatrixXcd &op, size_t site) {
    size_t d = s.local_dim();
    if (size_t(op.rows()) != d || size_t(op.cols()) != d) {
        throw DimensionError("local operator does not match the local dimension");
    }
    size_t st = s.stride(site), block = st * d, dim = s.dim();
    auto &a = s.amplitudes();
    cplx buf[3], out[3];
    for (size_t hi = 0; hi < dim; hi += block) {
        for (size_t lo = 0; lo < st; lo++) {
            size_t base = hi + lo;
            for (size_t k = 0; k < d; k++) {
                buf[k] = a[Eigen::Index(base + k * st)];
            }
            for (size_t r = 0; r < d; r++) {
                cplx acc = 0;
                for (size_t k = 0; k < d; k++) {
                    acc += op(Eigen::Index(r), Eigen::Index(k)) * buf[k];
                }
                out[r] = acc;
            }
            for (size_t k = 0; k < d; k++) {
                a[Eigen::Index(base + k * st)] = out[k];
            }
        }
    }
}

void apply_two_site(DenseState &s, const Eigen::Matrix4cd &op, size_t a, size_t b) {
    if (s.local_dim() != 2) {
        throw DimensionError("two-site gates need qubits");
    }
    if (a == b) {
        throw std::invalid_argument("two-site gate on a single site");
    }
    size_t ba = s.stride(a), bb = s.stride(b), dim = s.dim();
    size_t lo = std::min(ba, bb), hi = std::max(ba, bb);
    auto &amp = s.amplitudes();
    for (size_t k = 0; k < dim / 4; k++) {
        // Spread k around zero bits at lo and hi.
        size_t idx = ((k & ~(lo - 1)) << 1) | (k & (lo - 1));
        idx = ((idx & ~(hi - 1)) << 1) | (idx & (hi - 1));
        const size_t ix[4] = {idx, idx | ba, idx | bb, idx | ba | bb};
        Eigen::Vector4cd v;
        for (int k = 0; k < 4; k++) {
            v[k] = amp[Eigen::Index(ix[k])];
        }
        Eigen::Vector4cd w = op * v;
        for (int k = 0; k < 4; k++) {
            amp[Eigen::Index(ix[k])] = w[k];
        }
    }
}

void rotate_to_basis(DenseState &s, const Region &sites, LocalBasis basis) {
    if (basis == LocalBasis::Z || basis == LocalBasis::U) {
        basis_matrix(basis, s.local_dim());
        return;
    }
    Eigen::MatrixXcd adj = basis_matrix(basis, s.local_dim()).adjoint();
    for (size_t q : sites) {
        apply_local(s, adj, q);
    }
}

double correlator(const DenseState &s, const Eigen::MatrixXcd &op_a, size_t site_a, const Eigen::MatrixXcd &op_b,
                  size_t site_b) {
    s.stride(site_a);
    s.stride(site_b);
    if (site_a == site_b) {
        throw std::invalid_argument("correlator needs two distinct sites");
    }
    DenseState phi = s;
    apply_local(phi, op_b, site_b);
    apply_local(phi, op_a, site_a);
    cplx v = s.amplitudes().dot(phi.amplitudes());
    if (is_hermitian(op_a) && is_hermitian(op_b) && std::abs(v.imag()) > 1e-10) {
        throw ValidationError("imaginary part " + std::to_string(v.imag()) + " in a Hermitian correlator");
    }
    return v.real();
}

double entanglement_entropy_nats(const DenseState &s, const Region &region) {
    size_t d = s.local_dim(), n = s.num_sites();
    std::vector<bool> in(n, false);
    for (size_t q : region) {
        s.stride(q);
        if (in[q]) {
            throw std::invalid_argument("repeated site in region");
        }
        in[q] = true;
    }
    size_t k = region.size();
    size_t rest = n - k;
    size_t small = std::min(k, rest);
    size_t small_dim = 1;
    for (size_t j = 0; j < small; j++) {
        small_dim *= d;
    }
    if (small_dim > 4096) {
        throw DimensionError("reduced density matrix larger than 4096");
    }
    if (small == 0) {
        return 0.0;
    }
    size_t rows = 1, cols = 1;
    for (size_t j = 0; j < k; j++) {
        rows *= d;
    }
    cols = s.dim() / rows;
    // Row index: digits of `region` in order; column: digits of the rest.
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::vector<size_t> row_w(n, 0), col_w(n, 0);
    size_t rw = 1, cw = 1;
    for (size_t q : region) {
        row_w[q] = rw;
        rw *= d;
    }
    for (size_t q = 0; q < n; q++) {
        if (!in[q]) {
            col_w[q] = cw;
            cw *= d;
        }
    }
    const auto &amp = s.amplitudes();
    std::vector<size_t> dig(n, 0);
    size_t r = 0, c = 0;
    for (size_t idx = 0; idx < s.dim(); idx++) {
        m(Eigen::Index(r), Eigen::Index(c)) = amp[Eigen::Index(idx)];
        // Increment the base-d counter, updating r and c.
        for (size_t q = 0; q < n; q++) {
            size_t w = in[q] ? row_w[q] : col_w[q];
            size_t &acc = in[q] ? r : c;
            if (dig[q] + 1 < d) {
                dig[q]++;
                acc += w;
                break;
            }
            acc -= dig[q] * w;
            dig[q] = 0;
        }
    }
    Eigen::MatrixXcd rho = rows <= cols ? Eigen::MatrixXcd(m * m.adjoint()) : Eigen::MatrixXcd(m.adjoint() * m);
    rho /= rho.trace().real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    double sum = 0;
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); j++) {
        double lam = es.eigenvalues()[j];
        if (lam > 1e-14) {
            sum -= lam * std::log(lam);
        }
    }
    return sum;
}

SiteOutcome measure_site(DenseState &s, size_t site, LocalBasis basis, std::mt19937_64 &rng,
                         std::optional<size_t> forced) {
    size_t d = s.local_dim();
    Eigen::MatrixXcd b = basis_matrix(basis, d);
    bool computational = basis == LocalBasis::Z || basis == LocalBasis::U;
    if (!computational) {
        apply_local(s, b.adjoint(), site);
    }
    size_t st = s.stride(site), dim = s.dim();
    auto &amp = s.amplitudes();
    auto digit = [&](size_t idx) { return d == 2 ? (idx & st ? 1 : 0) : (idx / st) % 3; };
    double probs[3] = {0, 0, 0};
    for (size_t idx = 0; idx < dim; idx++) {
        probs[digit(idx)] += std::norm(amp[Eigen::Index(idx)]);
    }
    double total = probs[0] + probs[1] + probs[2];
    size_t outcome = 0;
    if (forced) {
        if (*forced >= d) {
            throw std::invalid_argument("forced outcome out of range");
        }
        outcome = *forced;
        if (probs[outcome] <= 1e-14 * total) {
            throw std::invalid_argument("forced outcome has zero probability");
        }
    } else {
        double u = double(rng() >> 11) * 0x1.0p-53 * total;
        double acc = 0;
        outcome = d - 1;
        for (size_t k = 0; k < d; k++) {
            acc += probs[k];
            if (u < acc && probs[k] > 0) {
                outcome = k;
                break;
            }
        }
        while (probs[outcome] <= 0 && outcome > 0) {
            outcome--;
        }
    }
    double scale = 1 / std::sqrt(probs[outcome]);
    for (size_t idx = 0; idx < dim; idx++) {
        if (digit(idx) == outcome) {
            amp[Eigen::Index(idx)] *= scale;
        } else {
            amp[Eigen::Index(idx)] = 0;
        }
    }
    if (!computational) {
        apply_local(s, b, site);
    }
    return {outcome, probs[outcome] / total};
}

bool state_is_sign_free(const DenseState &s, LocalBasis basis, double tol) {
    DenseState r = s;
    Region all;
    for (size_t q = 0; q < s.num_sites(); q++) {
        all.push_back(q);
    }
    rotate_to_basis(r, all, basis);
    r.fix_global_phase();
    for (Eigen::Index k = 0; k < r.amplitudes().size(); k++) {
        cplx a = r.amplitudes()[k];
        if (a.real() < -tol || std::abs(a.imag()) > tol) {
            return false;
        }
    }
    return true;
}

DenseState to_dense_state(const Tableau &t) {
    size_t n = t.num_qubits();
    if (n > 22) {
        throw DimensionError("stabilizer state too large for a dense vector");
    }
    // A computational basis state in the support: measure every qubit in Z.
    Tableau probe = t;
    probe.reseed(0);
    size_t start = 0;
    for (size_t q = 0; q < n; q++) {
        if (probe.measure_z(q).outcome == -1) {
            start |= size_t{1} << q;
        }
    }
    DenseState s(2, n);
    auto &amp = s.amplitudes();
    amp.setZero();
    amp[Eigen::Index(start)] = 1;
    for (const PauliString &g : t.stabilizers()) {
        uint64_t x = 0, z = 0;
        for (size_t q = 0; q < n; q++) {
            x |= uint64_t(g.xs[q]) << q;
            z |= uint64_t(g.zs[q]) << q;
        }
        cplx pre = i_pow(int(g.phase) + std::popcount(x & z));
        Eigen::VectorXcd out = amp;
        for (uint64_t b = 0; b < uint64_t(s.dim()); b++) {
            double sign = (std::popcount(z & b) & 1) ? -1.0 : 1.0;
            out[Eigen::Index(b ^ x)] += pre * sign * amp[Eigen::Index(b)];
        }
        amp = 0.5 * out;
    }
    s.normalize();
    s.fix_global_phase();
    return s;
}

}  // namespace mielab
