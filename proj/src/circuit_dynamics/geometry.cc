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

#include "mielab/circuit_dynamics/geometry.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mielab {

double cross_ratio(size_t x1, size_t x2, size_t x3, size_t x4, size_t L) {
    if (L < 2) {
        throw std::invalid_argument("ring needs at least 2 sites");
    }
    size_t d12 = (x2 % L + L - x1 % L) % L;
    size_t d23 = (x3 % L + L - x2 % L) % L;
    size_t d34 = (x4 % L + L - x3 % L) % L;
    size_t d41 = (x1 % L + L - x4 % L) % L;
    if (d12 == 0 || d34 == 0 || d12 + d23 + d34 + d41 != L) {
        throw std::invalid_argument("intervals [" + std::to_string(x1) + "," + std::to_string(x2) + ") and [" +
                                    std::to_string(x3) + "," + std::to_string(x4) +
                                    ") are empty, overlapping or out of cyclic order");
    }
    auto w = [&](size_t d) { return std::sin(std::numbers::pi * double(d) / double(L)); };
    return w(d12) * w(d34) / (w(d12 + d23) * w(d23 + d34));
}

Geometry Geometry::make(size_t x1, size_t x2, size_t x3, size_t x4, size_t L) {
    Geometry g;
    g.L = L;
    g.eta = cross_ratio(x1, x2, x3, x4, L);
    g.x1 = x1 % L;
    g.x2 = x2 % L;
    g.x3 = x3 % L;
    g.x4 = x4 % L;
    return g;
}

Geometry Geometry::translated(size_t shift) const {
    Geometry g = *this;
    g.x1 = (x1 + shift) % L;
    g.x2 = (x2 + shift) % L;
    g.x3 = (x3 + shift) % L;
    g.x4 = (x4 + shift) % L;
    return g;
}

std::vector<Geometry> antipodal_family(size_t L, size_t l_min, size_t l_max) {
    if (L % 2 != 0 || l_min < 1 || l_max > L / 2 || l_min > l_max) {
        throw std::invalid_argument("antipodal family needs even L and 1 <= l_min <= l_max <= L/2");
    }
    std::vector<Geometry> out;
    for (size_t l = l_min; l <= l_max; l++) {
        out.push_back(Geometry::make(0, l, L / 2, L / 2 + l, L));
    }
    return out;
}

}  // namespace mielab
