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

#include "mielab/statevector_lab/haar.h"

#include <cmath>
#include <stdexcept>

#include "mielab/circuit_dynamics/circuit.h"
#include "mielab/circuit_dynamics/sampling.h"
#include "mielab/statevector_lab/measurement_entanglement.h"

namespace mielab {

Eigen::MatrixXcd haar_unitary(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < g.rows(); i++) {
        for (Eigen::Index j = 0; j < g.cols(); j++) {
            double re = gauss(rng);
            g(i, j) = cplx(re, gauss(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); j++) {
        cplx d = r(j, j);
        double a = std::abs(d);
        q.col(j) *= a > 0 ? d / a : cplx(1, 0);
    }
    return q;
}

DenseState haar_hybrid_trajectory(size_t L, double p, size_t layers, std::mt19937_64 &rng,
                                  const LayerObserver &observe) {
    if (L < 4 || L > 20 || L % 2 != 0) {
        throw std::invalid_argument("haar hybrid needs even L in [4, 20]");
    }
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    DenseState s(2, L);
    for (size_t t = 1; t <= layers; t++) {
        for (size_t i = (t - 1) % 2; i < L; i += 2) {
            Eigen::Matrix4cd u = haar_unitary(4, rng);
            apply_two_site(s, u, i, (i + 1) % L);
        }
        for (size_t q = 0; q < L; q++) {
            if (double(rng() >> 11) * 0x1.0p-53 < p) {
                measure_site(s, q, LocalBasis::Z, rng);
            }
        }
        if (observe) {
            observe(t, s);
        }
    }
    return s;
}

SampleAccumulator sample_haar_hybrid(const HaarHybridSpec &spec, const std::vector<Geometry> &geometries,
                                     size_t n_trajectories, uint64_t first_trajectory) {
    if (n_trajectories == 0) {
        throw std::invalid_argument("need at least one trajectory");
    }
    for (const Geometry &g : geometries) {
        if (g.L != spec.L) {
            throw std::invalid_argument("geometry ring size differs from L");
        }
    }
    size_t layers = spec.layers ? spec.layers : 2 * spec.L;
    SampleAccumulator acc;
    for (size_t k = 0; k < n_trajectories; k++) {
        std::mt19937_64 rng(trajectory_seed(spec.seed, first_trajectory + k));
        DenseState s = haar_hybrid_trajectory(spec.L, spec.p, layers, rng);
        for (size_t gi = 0; gi < geometries.size(); gi++) {
            Region a = geometries[gi].a(), b = geometries[gi].b();
            acc.add(observable_key(gi, "mi"), mutual_information_nats(s, a, b));
            acc.add(observable_key(gi, "mie_z"), mie_exact(s, a, b, LocalBasis::Z).mie);
        }
    }
    return acc;
}

}  // namespace mielab
