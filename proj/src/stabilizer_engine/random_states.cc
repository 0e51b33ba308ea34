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

#include "mielab/stabilizer_engine/random_states.h"

#include <algorithm>
#include <stdexcept>

namespace mielab {
namespace {

size_t pick(std::mt19937_64 &rng, size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

std::pair<size_t, size_t> pick_pair(std::mt19937_64 &rng, size_t n) {
    size_t a = pick(rng, n);
    size_t b = pick(rng, n - 1);
    return {a, b >= a ? b + 1 : b};
}

}  // namespace

Tableau random_stabilizer_state(size_t n, size_t steps, uint64_t seed) {
    Tableau t(n, seed);
    std::mt19937_64 &rng = t.rng();
    for (size_t k = 0; k < steps; k++) {
        size_t op = pick(rng, n >= 2 ? 6 : 3);
        switch (op) {
            case 0:
                t.h(pick(rng, n));
                break;
            case 1:
                t.s(pick(rng, n));
                break;
            case 2:
                t.measure_z(pick(rng, n));
                break;
            case 3:
            case 4: {
                auto [a, b] = pick_pair(rng, n);
                t.cnot(a, b);
                break;
            }
            default: {
                auto [a, b] = pick_pair(rng, n);
                t.random_clifford2(a, b);
                break;
            }
        }
    }
    return t;
}

Tableau random_css_state(size_t n, size_t steps, uint64_t seed) {
    if (n < 3) {
        throw std::invalid_argument("random_css_state needs at least 3 qubits");
    }
    Tableau t = Tableau::plus_state(n, seed);
    std::mt19937_64 &rng = t.rng();
    for (size_t k = 0; k < steps; k++) {
        size_t op = pick(rng, 9);
        switch (op) {
            case 0: {
                auto [a, b] = pick_pair(rng, n);
                t.cnot(a, b);
                break;
            }
            case 1:
                rng() & 1 ? t.x(pick(rng, n)) : t.z(pick(rng, n));
                break;
            case 2:
                t.measure_x(pick(rng, n));
                break;
            case 3:
            case 4: {
                size_t i = pick(rng, n);
                PauliString p(n);
                p.xs.set(i, true);
                p.xs.set((i + 1) % n, true);
                t.measure(p);
                break;
            }
            case 5:
            case 6: {
                size_t i = pick(rng, n);
                size_t j = (i + (op == 5 ? 1 : 2)) % n;
                PauliString p(n);
                p.zs.set(i, true);
                p.zs.set(j, true);
                t.measure(p);
                break;
            }
            default: {
                PauliString p(n);
                bool use_x = op == 7;
                size_t weight = 1 + pick(rng, std::min<size_t>(n, 5));
                for (size_t w = 0; w < weight; w++) {
                    size_t q = pick(rng, n);
                    (use_x ? p.xs : p.zs).set(q, true);
                }
                if (!p.is_identity()) {
                    t.measure(p);
                }
                break;
            }
        }
    }
    return t;
}

Tripartition random_tripartition(size_t n, std::mt19937_64 &rng) {
    if (n < 2) {
        throw std::invalid_argument("tripartition needs at least 2 qubits");
    }
    while (true) {
        Tripartition part;
        for (size_t q = 0; q < n; q++) {
            switch (pick(rng, 3)) {
                case 0:
                    part.a.push_back(q);
                    break;
                case 1:
                    part.b.push_back(q);
                    break;
                default:
                    part.c.push_back(q);
                    break;
            }
        }
        if (!part.a.empty() && !part.b.empty()) {
            return part;
        }
    }
}

}  // namespace mielab
