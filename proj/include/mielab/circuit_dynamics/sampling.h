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

#ifndef MIELAB_CIRCUIT_DYNAMICS_SAMPLING_H
#define MIELAB_CIRCUIT_DYNAMICS_SAMPLING_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mielab/analysis/results_io.h"
#include "mielab/analysis/stats.h"
#include "mielab/circuit_dynamics/circuit.h"
#include "mielab/circuit_dynamics/geometry.h"

namespace mielab {

struct SampleOptions {
    bool mi = true;
    std::vector<Basis> bases = {Basis::Z, Basis::X};
    /// Average each record over ring shifts 0, stride, 2*stride, ... (0 = no averaging).
    size_t translation_stride = 0;
    /// Also record "g<i>:violation" (1 when MIE_Z > MI) per placement. Needs mi and Z.
    bool count_violations = false;
    uint64_t first_trajectory = 0;
};

std::string observable_key(size_t geometry, const std::string &observable);

/// Groups geometry indices into chains whose A and B regions are nested
/// (same x1 and x3, lengths nondecreasing).
std::vector<std::vector<size_t>> nested_chains(const std::vector<Geometry> &geometries);

/// Values of each observable along one chain, in chain order.
struct ChainValues {
    std::vector<size_t> mi, mie_z, mie_x;
};

/// Evaluates a chain of nested (A_k, B_k) regions on the current state.
using ChainEvaluator =
    std::function<ChainValues(const std::vector<Region> &a_chain, const std::vector<Region> &b_chain)>;

/// One record: every chain at every shift, averaged over shifts per geometry.
void record_observables(const ChainEvaluator &evaluate, const std::vector<Geometry> &geometries,
                        const std::vector<std::vector<size_t>> &chains, const SampleOptions &options,
                        SampleAccumulator &acc);

/// Evaluator backed by nested elimination on a tableau.
ChainEvaluator tableau_evaluator(const Tableau &t, const SampleOptions &options);

/// Runs trajectories first_trajectory .. first_trajectory + n_trajectories - 1
/// and records t_sample snapshots of each.
SampleAccumulator sample_ensemble(const CircuitSpec &spec, const std::vector<Geometry> &geometries,
                                  size_t n_trajectories, const SampleOptions &options = {});

/// One CSV row per (geometry, observable) found in the accumulator.
std::vector<ResultRow> result_rows(const CircuitSpec &spec, const std::vector<Geometry> &geometries,
                                   const SampleAccumulator &acc);

}  // namespace mielab

#endif
