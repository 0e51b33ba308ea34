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

#ifndef MIELAB_STATEVECTOR_LAB_MEASUREMENT_ENTANGLEMENT_H
#define MIELAB_STATEVECTOR_LAB_MEASUREMENT_ENTANGLEMENT_H

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "mielab/statevector_lab/dense_state.h"

namespace mielab {

/// Entropies here are in nats. C is every site outside A and B.

struct OutcomeEntropy {
    /// Outcome digits on C packed base d, first C site least significant.
    size_t outcome;
    double entropy;
    double probability;
};

struct MieDistribution {
    double mie = 0;
    /// Outcomes of nonzero probability, in outcome order.
    std::vector<OutcomeEntropy> outcomes;
};

/// Largest d^|C| mie_exact will enumerate.
inline constexpr size_t kMaxOutcomes = 4'000'000;

/// Exact outcome average of S_A over measurements of C in `basis`. Throws
/// DimensionError when d^|C| exceeds kMaxOutcomes.
MieDistribution mie_exact(const DenseState &s, const Region &a, const Region &b, LocalBasis basis);

struct HistogramBin {
    double lo;
    double hi;
    double probability_density;
};

/// Equal-width bins on [0, max_entropy]; entries at max_entropy land in the
/// last bin. Densities integrate to 1.
std::vector<HistogramBin> entropy_histogram(const MieDistribution &dist, size_t bins, double max_entropy);
/// Header entropy_bin_lo,entropy_bin_hi,probability_density.
void write_histogram_csv(std::ostream &out, const std::vector<HistogramBin> &bins);

struct SampledMie {
    double mean = 0;
    double standard_error = 0;
    std::vector<double> samples;
};

/// Independent sweeps: each sample measures the C sites one at a time in
/// order, drawing from the conditional Born probabilities.
SampledMie mie_sampled(const DenseState &s, const Region &a, const Region &b, LocalBasis basis, size_t n_samples,
                       uint64_t seed);

struct MicResult {
    double mic;
    double xx;
    double yy_abs;
};

/// Outcome-averaged concurrence 2|ad - bc| of the post-measurement pair state,
/// measuring C in `basis`, with <X_a X_b> and |<Y_a Y_b>|. Qubits only.
MicResult mic_exact(const DenseState &s, size_t a, size_t b, LocalBasis basis = LocalBasis::Z);

/// S_A after projecting every C site on outcome 0 of `basis` (|0> for Z and
/// U, |+> for X, the uniform superposition for V). Throws
/// std::invalid_argument when that outcome has zero probability.
double fmie(const DenseState &s, const Region &a, const Region &b, LocalBasis basis);

/// S_A + S_B - S_AB in nats.
double mutual_information_nats(const DenseState &s, const Region &a, const Region &b);

}  // namespace mielab

#endif
