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

#ifndef MIELAB_STABILIZER_ENGINE_NESTED_OBSERVABLES_H
#define MIELAB_STABILIZER_ENGINE_NESTED_OBSERVABLES_H

#include <cstddef>
#include <vector>

#include "mielab/stabilizer_engine/entropy.h"
#include "mielab/stabilizer_engine/tableau.h"

namespace mielab {

/// Entropy of every region in a chain R_0 ⊆ R_1 ⊆ ... from one elimination
/// pass. Throws std::invalid_argument if the chain is not nested.
std::vector<size_t> nested_entropy_bits(const Tableau &t, const std::vector<Region> &chain);

/// MIE of every (A_k, B_k) for chains A_0 ⊆ A_1 ⊆ ... and B_0 ⊆ B_1 ⊆ ...,
/// sharing one elimination of the complement columns across the chain.
std::vector<size_t> nested_mie_bits(const Tableau &t, const std::vector<Region> &a_chain,
                                    const std::vector<Region> &b_chain, Basis basis);

/// MI of every (A_k, B_k) along nested chains.
std::vector<size_t> nested_mutual_information_bits(const Tableau &t, const std::vector<Region> &a_chain,
                                                   const std::vector<Region> &b_chain);

}  // namespace mielab

#endif
