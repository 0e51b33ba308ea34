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

#include "mielab/circuit_dynamics/circuit.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mielab/stabilizer_engine/clifford2.h"

namespace mielab {

std::string model_name(Model m) {
    switch (m) {
        case Model::XZZ:
            return "xzz";
        case Model::XXZIZ:
            return "xxziz";
        case Model::CliffordHybrid:
            return "clifford";
    }
    return "?";
}

Model parse_model(std::string text) {
    std::string key;
    for (char c : text) {
        if (c != '-' && c != '_') {
            key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    if (key == "xzz") {
        return Model::XZZ;
    }
    if (key == "xxziz") {
        return Model::XXZIZ;
    }
    if (key == "clifford" || key == "cliffordhybrid") {
        return Model::CliffordHybrid;
    }
    throw std::invalid_argument("unknown model '" + text + "' (expected xzz, xxziz or clifford)");
}

CircuitSpec CircuitSpec::with_defaults(Model model, size_t L, double p, uint64_t seed) {
    CircuitSpec s;
    s.model = model;
    s.L = L;
    s.p = p;
    s.t_equilibrate = 2 * L;
    s.t_sample = L;
    s.seed = seed;
    return s;
}

void CircuitSpec::validate() const {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    if (L < 4 || L % 2 != 0) {
        throw std::invalid_argument("L must be even and at least 4");
    }
    if (t_equilibrate < 1) {
        throw std::invalid_argument("t_equilibrate must be at least 1");
    }
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

EventSource::EventSource(const CircuitSpec &spec, uint64_t trajectory_index)
    : spec_(spec),
      seed_(trajectory_seed(spec.seed, trajectory_index)),
      outcome_seed_(splitmix64(seed_ ^ 0x6A09E667F3BCC909ULL)),
      placement_(seed_) {
    spec_.validate();
}

bool EventSource::bernoulli(double prob) {
    if (prob <= 0) {
        return false;
    }
    if (prob >= 1) {
        return true;
    }
    return double(placement_() >> 11) * 0x1.0p-53 < prob;
}

Layer EventSource::next() {
    Layer layer;
    layer.index = ++layer_;
    uint32_t L = static_cast<uint32_t>(spec_.L);
    bool odd = layer.index % 2 == 1;
    switch (spec_.model) {
        case Model::XZZ:
            if (odd) {
                for (uint32_t i = 0; i < L; i++) {
                    if (bernoulli(spec_.p)) {
                        layer.measurements.push_back({EventKind::MeasureX, i, i, 0});
                    }
                }
            } else {
                for (uint32_t i = 0; i < L; i++) {
                    if (bernoulli(1 - spec_.p)) {
                        layer.measurements.push_back({EventKind::MeasureZZ, i, (i + 1) % L, 0});
                    }
                }
            }
            break;
        case Model::XXZIZ:
            if (odd) {
                for (uint32_t i = 0; i < L; i++) {
                    if (bernoulli(spec_.p)) {
                        layer.measurements.push_back({EventKind::MeasureXX, i, (i + 1) % L, 0});
                    }
                }
            } else {
                for (uint32_t i = 0; i < L; i++) {
                    if (bernoulli(1 - spec_.p)) {
                        layer.measurements.push_back({EventKind::MeasureZZ, i, (i + 2) % L, 0});
                    }
                }
            }
            break;
        case Model::CliffordHybrid: {
            std::uniform_int_distribution<uint32_t> pick(0, kNumClifford2 - 1);
            for (uint32_t i = odd ? 0 : 1; i < L; i += 2) {
                layer.unitaries.push_back({EventKind::Clifford2, i, (i + 1) % L, pick(placement_)});
            }
            for (uint32_t i = 0; i < L; i++) {
                if (bernoulli(spec_.p)) {
                    layer.measurements.push_back({EventKind::MeasureZ, i, i, 0});
                }
            }
            break;
        }
    }
    return layer;
}

void apply_event(Tableau &t, const Event &e) {
    size_t n = t.num_qubits();
    switch (e.kind) {
        case EventKind::MeasureX:
            t.measure_x(e.a);
            break;
        case EventKind::MeasureZ:
            t.measure_z(e.a);
            break;
        case EventKind::MeasureXX: {
            PauliString p(n);
            p.xs.set(e.a, true);
            p.xs.set(e.b, true);
            t.measure(p);
            break;
        }
        case EventKind::MeasureZZ: {
            PauliString p(n);
            p.zs.set(e.a, true);
            p.zs.set(e.b, true);
            t.measure(p);
            break;
        }
        case EventKind::Clifford2:
            t.clifford2(e.gate, e.a, e.b);
            break;
    }
}

void apply_events(Tableau &t, const std::vector<Event> &events) {
    for (const Event &e : events) {
        apply_event(t, e);
    }
}

void drive_schedule(const CircuitSpec &spec, EventSource &source,
                    const std::function<void(const std::vector<Event> &)> &apply,
                    const std::function<void(size_t, size_t)> &observe) {
    for (size_t k = 0; k < spec.t_equilibrate; k++) {
        Layer layer = source.next();
        apply(layer.unitaries);
        apply(layer.measurements);
    }
    bool after_unitaries = spec.model == Model::CliffordHybrid;
    for (size_t rec = 0; rec < spec.t_sample; rec++) {
        Layer first = source.next();
        apply(first.unitaries);
        apply(first.measurements);
        Layer second = source.next();
        apply(second.unitaries);
        if (after_unitaries) {
            observe(second.index, rec);
        }
        apply(second.measurements);
        if (!after_unitaries) {
            observe(second.index, rec);
        }
    }
}

Tableau run_trajectory(const CircuitSpec &spec, uint64_t trajectory_index, size_t layers) {
    EventSource source(spec, trajectory_index);
    Tableau t = Tableau::plus_state(spec.L, source.outcome_seed());
    size_t total = layers ? layers : spec.t_equilibrate;
    for (size_t k = 0; k < total; k++) {
        Layer layer = source.next();
        apply_events(t, layer.unitaries);
        apply_events(t, layer.measurements);
    }
    return t;
}

}  // namespace mielab
