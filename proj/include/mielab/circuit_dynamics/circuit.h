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

#ifndef MIELAB_CIRCUIT_DYNAMICS_CIRCUIT_H
#define MIELAB_CIRCUIT_DYNAMICS_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mielab/stabilizer_engine/tableau.h"

namespace mielab {

enum class Model { XZZ, XXZIZ, CliffordHybrid };

std::string model_name(Model m);
/// Accepts "xzz", "xxziz", "clifford" (case-insensitive, '-' ignored).
Model parse_model(std::string text);

struct CircuitSpec {
    Model model = Model::XZZ;
    size_t L = 16;
    double p = 0.5;
    size_t t_equilibrate = 32;
    size_t t_sample = 16;
    uint64_t seed = 0;

    /// t_equilibrate = 2L, t_sample = L.
    static CircuitSpec with_defaults(Model model, size_t L, double p, uint64_t seed);
    /// Throws std::invalid_argument.
    void validate() const;
};

enum class EventKind : uint8_t { MeasureX, MeasureZ, MeasureXX, MeasureZZ, Clifford2 };

struct Event {
    EventKind kind;
    uint32_t a;
    uint32_t b;
    uint32_t gate;  // two-qubit Clifford index for Clifford2
    bool operator==(const Event &) const = default;
};

struct Layer {
    size_t index;  // 1-based
    std::vector<Event> unitaries;
    std::vector<Event> measurements;
};

uint64_t splitmix64(uint64_t x);

/// Seed of trajectory `index` within an ensemble.
inline uint64_t trajectory_seed(uint64_t ensemble_seed, uint64_t index) {
    return splitmix64(ensemble_seed + index);
}

/// Draws measurement placements and gate choices layer by layer. The same
/// source drives the tableau engine and the cluster oracle; measurement
/// outcomes come from a separate stream owned by the tableau.
class EventSource {
   public:
    EventSource(const CircuitSpec &spec, uint64_t trajectory_index);

    Layer next();
    /// Seed for the outcome generator of this trajectory's tableau.
    uint64_t outcome_seed() const {
        return outcome_seed_;
    }
    uint64_t seed() const {
        return seed_;
    }

   private:
    bool bernoulli(double prob);

    CircuitSpec spec_;
    uint64_t seed_;
    uint64_t outcome_seed_;
    std::mt19937_64 placement_;
    size_t layer_ = 0;
};

void apply_event(Tableau &t, const Event &e);
void apply_events(Tableau &t, const std::vector<Event> &events);

/// Equilibration, then t_sample records spaced one layer pair apart. For the
/// Clifford hybrid a record is taken right after the unitary sublayer;
/// otherwise after a full layer. `observe(layer_index, record_index)`.
void drive_schedule(const CircuitSpec &spec, EventSource &source,
                    const std::function<void(const std::vector<Event> &)> &apply,
                    const std::function<void(size_t, size_t)> &observe);

/// Steady-state tableau of one trajectory after `layers` layers (spec
/// t_equilibrate when 0), starting from |+...+>.
Tableau run_trajectory(const CircuitSpec &spec, uint64_t trajectory_index, size_t layers = 0);

}  // namespace mielab

#endif
