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

#ifndef MIELAB_STABILIZER_ENGINE_RANDOM_STATES_H
#define MIELAB_STABILIZER_ENGINE_RANDOM_STATES_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mielab/stabilizer_engine/tableau.h"

namespace mielab {

/// Generic stabilizer state: `steps` random H, S, CNOT, two-qubit Clifford
/// and single-qubit measurement operations on |0...0>.
Tableau random_stabilizer_state(size_t n, size_t steps, uint64_t seed);

/// CSS state: |+...+> evolved by random CNOTs, X/Z flips, and measurements of
/// X_i, X_iX_j, Z_iZ_j, Z_iZ_{i+2} and random pure-X / pure-Z strings.
/// Signs are not forced positive.
Tableau random_css_state(size_t n, size_t steps, uint64_t seed);

/// Each qubit lands in A, B or C uniformly; redrawn until A and B are nonempty.
struct Tripartition {
    std::vector<size_t> a, b, c;
};
Tripartition random_tripartition(size_t n, std::mt19937_64 &rng);

}  // namespace mielab

#endif
