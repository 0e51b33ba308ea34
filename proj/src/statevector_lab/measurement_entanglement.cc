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

#include "mielab/statevector_lab/measurement_entanglement.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mielab/errors.h"

namespace mielab {

namespace {

/// offs[k] = sum_i digit_i(k) * stride(site_i), first site least significant.
std::vector<size_t> offset_table(const DenseState &s, const Region &sites, size_t cap) {
    std::vector<size_t> offs{0};
    for (size_t q : sites) {
        size_t st = s.stride(q);
        size_t len = offs.size();
        if (len * s.local_dim() > cap) {
            throw DimensionError("enumeration over " + std::to_string(sites.size()) + " sites exceeds the cap");
        }
        offs.resize(len * s.local_dim());
        for (size_t digit = 1; digit < s.local_dim(); digit++) {
            for (size_t j = 0; j < len; j++) {
                offs[digit * len + j] = offs[j] + digit * st;
            }
        }
    }
    return offs;
}

struct Split {
    Region c;
    Region ab;
    size_t dim_a;
    size_t dim_b;
};

Split split_sites(const DenseState &s, const Region &a, const Region &b) {
    Region ra = make_region(a, s.num_sites()), rb = make_region(b, s.num_sites());
    if (ra.empty() || rb.empty()) {
        throw std::invalid_argument("A and B must be nonempty");
    }
    require_disjoint(ra, rb);
    Split sp;
    sp.c = complement(ra, rb, s.num_sites());
    sp.ab = ra;
    sp.ab.insert(sp.ab.end(), rb.begin(), rb.end());
    sp.dim_a = 1;
    for (size_t k = 0; k < ra.size(); k++) {
        sp.dim_a *= s.local_dim();
    }
    sp.dim_b = 1;
    for (size_t k = 0; k < rb.size(); k++) {
        sp.dim_b *= s.local_dim();
    }
    if (std::min(sp.dim_a, sp.dim_b) > 4096) {
        throw DimensionError("reduced density matrix larger than 4096");
    }
    return sp;
}

double entropy_of_eigenvalues(const Eigen::VectorXd &ev) {
    double sum = 0;
    for (Eigen::Index j = 0; j < ev.size(); j++) {
        if (ev[j] > 1e-14) {
            sum -= ev[j] * std::log(ev[j]);
        }
    }
    return sum;
}

/// S_A of the (unnormalized) block chi, indexed a + dim_a * b.
double block_entropy(const Eigen::VectorXcd &chi, size_t dim_a, size_t dim_b) {
    double norm2 = chi.squaredNorm();
    Eigen::Map<const Eigen::MatrixXcd> m(chi.data(), Eigen::Index(dim_a), Eigen::Index(dim_b));
    if (std::min(dim_a, dim_b) == 2) {
        Eigen::Matrix2cd rho = dim_a == 2 ? Eigen::Matrix2cd(m * m.adjoint()) : Eigen::Matrix2cd(m.adjoint() * m);
        rho /= norm2;
        double det = std::max(0.0, (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real());
        double root = std::sqrt(std::max(0.0, 1 - 4 * det));
        Eigen::VectorXd ev(2);
        ev << 2 * det / (1 + root), (1 + root) / 2;
        return entropy_of_eigenvalues(ev);
    }
    Eigen::MatrixXcd rho = dim_a <= dim_b ? Eigen::MatrixXcd(m * m.adjoint()) : Eigen::MatrixXcd(m.adjoint() * m);
    rho /= norm2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return entropy_of_eigenvalues(es.eigenvalues());
}

void gather(const DenseState &s, size_t base, const std::vector<size_t> &ab_offs, Eigen::VectorXcd &chi) {
    const auto &amp = s.amplitudes();
    for (size_t k = 0; k < ab_offs.size(); k++) {
        chi[Eigen::Index(k)] = amp[Eigen::Index(base + ab_offs[k])];
    }
}

}  // namespace

MieDistribution mie_exact(const DenseState &s, const Region &a, const Region &b, LocalBasis basis) {
    Split sp = split_sites(s, a, b);
    DenseState r = s;
    rotate_to_basis(r, sp.c, basis);
    std::vector<size_t> c_offs = offset_table(r, sp.c, kMaxOutcomes);
    std::vector<size_t> ab_offs = offset_table(r, sp.ab, kMaxDenseDim);
    double total = r.amplitudes().squaredNorm();
    MieDistribution dist;
    Eigen::VectorXcd chi(Eigen::Index(ab_offs.size()));
    double acc = 0;
    for (size_t c = 0; c < c_offs.size(); c++) {
        gather(r, c_offs[c], ab_offs, chi);
        double p = chi.squaredNorm() / total;
        if (p <= 0) {
            continue;
        }
        double e = block_entropy(chi, sp.dim_a, sp.dim_b);
        dist.outcomes.push_back({c, e, p});
        acc += p * e;
    }
    dist.mie = acc;
    return dist;
}

std::vector<HistogramBin> entropy_histogram(const MieDistribution &dist, size_t bins, double max_entropy) {
    if (bins == 0 || !(max_entropy > 0)) {
        throw std::invalid_argument("histogram needs bins > 0 and a positive range");
    }
    double width = max_entropy / double(bins);
    std::vector<double> mass(bins, 0.0);
    for (const auto &o : dist.outcomes) {
        if (o.entropy > max_entropy * (1 + 1e-12)) {
            throw std::invalid_argument("entropy " + std::to_string(o.entropy) + " beyond histogram range");
        }
        size_t k = std::min(bins - 1, size_t(std::max(0.0, o.entropy) / width));
        mass[k] += o.probability;
    }
    std::vector<HistogramBin> out;
    for (size_t k = 0; k < bins; k++) {
        out.push_back({double(k) * width, double(k + 1) * width, mass[k] / width});
    }
    return out;
}

void write_histogram_csv(std::ostream &out, const std::vector<HistogramBin> &bins) {
    out << "entropy_bin_lo,entropy_bin_hi,probability_density\n";
    out.precision(17);
    for (const auto &b : bins) {
        out << b.lo << ',' << b.hi << ',' << b.probability_density << '\n';
    }
}

SampledMie mie_sampled(const DenseState &s, const Region &a, const Region &b, LocalBasis basis, size_t n_samples,
                       uint64_t seed) {
    Split sp = split_sites(s, a, b);
    if (n_samples == 0) {
        throw std::invalid_argument("need at least one sample");
    }
    DenseState rotated = s;
    rotate_to_basis(rotated, sp.c, basis);
    rotated.normalize();
    LocalBasis frame = s.local_dim() == 2 ? LocalBasis::Z : LocalBasis::U;
    std::vector<size_t> ab_offs = offset_table(rotated, sp.ab, kMaxDenseDim);
    std::mt19937_64 rng(seed);
    SampledMie out;
    out.samples.reserve(n_samples);
    Eigen::VectorXcd chi(Eigen::Index(ab_offs.size()));
    double sum = 0, sumsq = 0;
    for (size_t k = 0; k < n_samples; k++) {
        DenseState w = rotated;
        size_t base = 0;
        for (size_t q : sp.c) {
            base += measure_site(w, q, frame, rng).outcome * w.stride(q);
        }
        gather(w, base, ab_offs, chi);
        double e = block_entropy(chi, sp.dim_a, sp.dim_b);
        out.samples.push_back(e);
        sum += e;
        sumsq += e * e;
    }
    double n = double(n_samples);
    out.mean = sum / n;
    if (n_samples > 1) {
        double var = std::max(0.0, (sumsq - n * out.mean * out.mean) / (n - 1));
        out.standard_error = std::sqrt(var / n);
    }
    return out;
}

MicResult mic_exact(const DenseState &s, size_t a, size_t b, LocalBasis basis) {
    if (s.local_dim() != 2) {
        throw DimensionError("concurrence needs qubits");
    }
    if (a == b) {
        throw std::invalid_argument("A and B must be distinct qubits");
    }
    Split sp = split_sites(s, {a}, {b});
    DenseState r = s;
    rotate_to_basis(r, sp.c, basis);
    std::vector<size_t> c_offs = offset_table(r, sp.c, kMaxOutcomes);
    size_t sa = r.stride(a), sb = r.stride(b);
    const auto &amp = r.amplitudes();
    double total = amp.squaredNorm();
    double mic = 0;
    for (size_t base : c_offs) {
        cplx c00 = amp[Eigen::Index(base)], c10 = amp[Eigen::Index(base + sa)];
        cplx c01 = amp[Eigen::Index(base + sb)], c11 = amp[Eigen::Index(base + sa + sb)];
        // p_c * concurrence(chi_c) with chi_c = block / sqrt(p_c).
        mic += 2 * std::abs(c00 * c11 - c01 * c10);
    }
    MicResult out;
    out.mic = mic / total;
    out.xx = correlator(s, pauli_x(), a, pauli_x(), b);
    out.yy_abs = std::abs(correlator(s, pauli_y(), a, pauli_y(), b));
    return out;
}

double fmie(const DenseState &s, const Region &a, const Region &b, LocalBasis basis) {
    Split sp = split_sites(s, a, b);
    DenseState r = s;
    rotate_to_basis(r, sp.c, basis);
    std::vector<size_t> ab_offs = offset_table(r, sp.ab, kMaxDenseDim);
    Eigen::VectorXcd chi(Eigen::Index(ab_offs.size()));
    gather(r, 0, ab_offs, chi);
    double p = chi.squaredNorm() / r.amplitudes().squaredNorm();
    if (p <= 1e-14) {
        throw std::invalid_argument("forced outcome pattern has zero probability");
    }
    return block_entropy(chi, sp.dim_a, sp.dim_b);
}

double mutual_information_nats(const DenseState &s, const Region &a, const Region &b) {
    Region ra = make_region(a, s.num_sites()), rb = make_region(b, s.num_sites());
    require_disjoint(ra, rb);
    return entanglement_entropy_nats(s, ra) + entanglement_entropy_nats(s, rb) -
           entanglement_entropy_nats(s, region_union(ra, rb));
}

}  // namespace mielab
