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

#ifndef MIELAB_PERCOLATION_ORACLE_CROSS_VALIDATE_H
#define MIELAB_PERCOLATION_ORACLE_CROSS_VALIDATE_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mielab/analysis/stats.h"
#include "mielab/circuit_dynamics/circuit.h"
#include "mielab/circuit_dynamics/geometry.h"
#include "mielab/circuit_dynamics/sampling.h"
#include "mielab/percolation_oracle/cluster.h"

namespace mielab {

/// MeasureX splits, MeasureZZ merges. Other events throw std::invalid_argument.
void apply_cluster_event(ClusterPartition &part, const Event &e);

struct CrossValidateOptions {
    /// Layers per trajectory; 0 means spec.t_equilibrate.
    size_t layers = 0;
    /// Compare after every k-th layer (the final layer is always compared).
    size_t compare_every = 1;
    /// Throw ValidationError on the first mismatch.
    bool fatal = true;
};

struct CrossValidateReport {
    uint64_t trajectories = 0;
    uint64_t comparisons = 0;
    uint64_t mismatches = 0;
    /// Description of the first mismatch, empty if none.
    std::string first_mismatch;

    /// {"trajectories":..,"comparisons":..,"mismatches":..} on one line.
    std::string to_json() const;
};

/// Drives the tableau engine and the cluster partition with the same event
/// stream and compares MI, MIE_X and MIE_Z for every geometry. A comparison
/// counts one (layer, geometry, observable) triple.
CrossValidateReport cross_validate(const CircuitSpec &spec, size_t n_trajectories,
                                   const std::vector<Geometry> &geometries, const CrossValidateOptions &options = {});

/// Cluster-backed chain evaluator.
ChainEvaluator cluster_evaluator(const ClusterPartition &part);

/// XZZ ensemble sampled on the cluster representation, same schedule and
/// accumulator keys as sample_ensemble.
SampleAccumulator sample_ensemble_clusters(const CircuitSpec &spec, const std::vector<Geometry> &geometries,
                                           size_t n_trajectories, const SampleOptions &options = {});

}  // namespace mielab

#endif
