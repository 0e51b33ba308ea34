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

#ifndef MIELAB_ANALYSIS_CLI_EXPERIMENTS_H
#define MIELAB_ANALYSIS_CLI_EXPERIMENTS_H

#include <cstdint>
#include <string>
#include <vector>

#include "mielab/analysis/fit.h"
#include "mielab/analysis/results_io.h"
#include "mielab/analysis/stats.h"
#include "mielab/circuit_dynamics/geometry.h"
#include "mielab/statevector_lab/haar.h"
#include "mielab/statevector_lab/hamiltonian.h"

namespace mielab {

struct FitWindow {
    double min;
    double max;
};

/// Small-eta window for circuit exponents.
inline constexpr FitWindow kMiptWindow{1e-3, 1e-1};

/// Fits mean(observable) against eta over the geometries, weighting by the
/// inverse relative variance. Throws FitError with fewer than four points.
PowerLawFit fit_geometry_series(const std::vector<Geometry> &geometries, const SampleAccumulator &acc,
                                const std::string &observable, FitWindow window, const std::string &label);

/// Fits every (model, L, p, observable, basis) group of rows against eta.
/// Groups with too few points are skipped.
std::vector<PowerLawFit> fit_result_rows(const std::vector<ResultRow> &rows, FitWindow window);

/// Rows in nats for a Haar hybrid ensemble.
std::vector<ResultRow> haar_result_rows(const HaarHybridSpec &spec, const std::vector<Geometry> &geometries,
                                        const SampleAccumulator &acc);

/// Exact single-site observables at separations 1..n/2 from site 0: MIE and
/// FMIE in `basis`, MI, and for qubits MIC with <XX> and |<YY>|. Entropies in
/// nats; n_samples is 0 for exact values.
std::vector<ResultRow> ground_state_rows(const HamiltonianSpec &spec, const GroundState &g, LocalBasis basis,
                                         uint64_t seed);

/// JSON array of PowerLawFit records.
void write_fits_json(const std::string &path, const std::vector<PowerLawFit> &fits);

}  // namespace mielab

#endif
