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

#ifndef MIELAB_STABILIZER_ENGINE_ENTROPY_H
#define MIELAB_STABILIZER_ENGINE_ENTROPY_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mielab/stabilizer_engine/tableau.h"

namespace mielab {

/// Sorted, duplicate-free qubit indices.
using Region = std::vector<size_t>;

/// Sorts `sites` and checks range and uniqueness (std::invalid_argument).
Region make_region(std::vector<size_t> sites, size_t n);
/// Sites start, start+1, ..., start+len-1 taken mod n, sorted.
Region ring_interval(size_t start, size_t len, size_t n);
/// Throws std::invalid_argument if a and b share a site.
void require_disjoint(const Region &a, const Region &b);
/// Qubits of [0, n) in neither a nor b.
Region complement(const Region &a, const Region &b, size_t n);
Region region_union(const Region &a, const Region &b);

/// Rank of the stabilizers restricted to A's columns, minus |A|.
size_t entropy_bits(const Tableau &t, const Region &a);

size_t mutual_information_bits(const Tableau &t, const Region &a, const Region &b);

/// Measures every qubit outside A and B in `basis` on a copy reseeded with
/// `seed`, then returns the entropy of A. Stabilizer states give the same
/// value on every outcome branch, so one branch is the average.
size_t mie_bits(const Tableau &t, const Region &a, const Region &b, Basis basis, uint64_t seed = 0);

/// Measurement-free route to the same number: with C the complement,
/// MIE_Z = rank G[X_C, X_A, Z_A] - rank G[X_C] - |A| (X basis: Z_C instead).
size_t mie_bits_elimination(const Tableau &t, const Region &a, const Region &b, Basis basis);

}  // namespace mielab

#endif
