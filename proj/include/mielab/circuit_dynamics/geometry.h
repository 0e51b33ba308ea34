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

#ifndef MIELAB_CIRCUIT_DYNAMICS_GEOMETRY_H
#define MIELAB_CIRCUIT_DYNAMICS_GEOMETRY_H

#include <cstddef>
#include <vector>

#include "mielab/stabilizer_engine/entropy.h"

namespace mielab {

/// Cross-ratio w12 w34 / (w13 w24) with w_ij = sin(pi |x_i - x_j| / L),
/// distances measured cyclically in the order x1, x2, x3, x4. Throws
/// std::invalid_argument for empty or overlapping intervals.
double cross_ratio(size_t x1, size_t x2, size_t x3, size_t x4, size_t L);

/// A = {x1, ..., x2 - 1}, B = {x3, ..., x4 - 1} on a ring of L sites.
struct Geometry {
    size_t x1 = 0, x2 = 0, x3 = 0, x4 = 0;
    size_t L = 0;
    double eta = 0;

    static Geometry make(size_t x1, size_t x2, size_t x3, size_t x4, size_t L);

    size_t len_a() const {
        return (x2 + L - x1) % L == 0 ? L : (x2 + L - x1) % L;
    }
    size_t len_b() const {
        return (x4 + L - x3) % L == 0 ? L : (x4 + L - x3) % L;
    }
    Region a() const {
        return ring_interval(x1, len_a(), L);
    }
    Region b() const {
        return ring_interval(x3, len_b(), L);
    }
    Geometry translated(size_t shift) const;
};

/// A = [0, l), B = [L/2, L/2 + l) for l = l_min..l_max; eta = sin^2(pi l / L).
std::vector<Geometry> antipodal_family(size_t L, size_t l_min, size_t l_max);

}  // namespace mielab

#endif
