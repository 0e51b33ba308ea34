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

#ifndef MIELAB_STATEVECTOR_LAB_HAAR_H
#define MIELAB_STATEVECTOR_LAB_HAAR_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mielab/analysis/stats.h"
#include "mielab/circuit_dynamics/geometry.h"
#include "mielab/statevector_lab/dense_state.h"

namespace mielab {

/// Haar-distributed n x n unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal folded into Q.
Eigen::MatrixXcd haar_unitary(size_t n, std::mt19937_64 &rng);

using LayerObserver = std::function<void(size_t layer, const DenseState &)>;

/// Periodic brickwork from |0...0>: layer t applies Haar gates on bonds
/// (i, i+1) with i = (t - 1) mod 2, +2, ..., then measures each site in Z with
/// probability p. L even, 4 <= L <= 20. `observe` runs after every layer.
DenseState haar_hybrid_trajectory(size_t L, double p, size_t layers, std::mt19937_64 &rng,
                                  const LayerObserver &observe = {});

struct HaarHybridSpec {
    size_t L = 16;
    double p = 0.17;
    /// 0 means 2L.
    size_t layers = 0;
    uint64_t seed = 1;
};

/// One value per trajectory under observable_key(g, "mi") and (g, "mie_z"),
/// both in nats. Trajectory k draws from mt19937_64(trajectory_seed(seed, k)).
SampleAccumulator sample_haar_hybrid(const HaarHybridSpec &spec, const std::vector<Geometry> &geometries,
                                     size_t n_trajectories, uint64_t first_trajectory = 0);

}  // namespace mielab

#endif
