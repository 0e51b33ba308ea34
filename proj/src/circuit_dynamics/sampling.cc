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

#include "mielab/circuit_dynamics/sampling.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "mielab/stabilizer_engine/nested_observables.h"

namespace mielab {

std::string observable_key(size_t geometry, const std::string &observable) {
    return "g" + std::to_string(geometry) + ":" + observable;
}

std::vector<std::vector<size_t>> nested_chains(const std::vector<Geometry> &geometries) {
    std::vector<size_t> order(geometries.size());
    for (size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    auto key = [&](size_t i) {
        const Geometry &g = geometries[i];
        return std::make_tuple(g.x1, g.x3, g.len_a(), g.len_b(), i);
    };
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return key(a) < key(b); });
    std::vector<std::vector<size_t>> chains;
    for (size_t i : order) {
        const Geometry &g = geometries[i];
        bool placed = false;
        for (auto &chain : chains) {
            const Geometry &last = geometries[chain.back()];
            if (last.x1 == g.x1 && last.x3 == g.x3 && last.len_a() <= g.len_a() && last.len_b() <= g.len_b()) {
                chain.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            chains.push_back({i});
        }
    }
    return chains;
}

void record_observables(const ChainEvaluator &evaluate, const std::vector<Geometry> &geometries,
                        const std::vector<std::vector<size_t>> &chains, const SampleOptions &options,
                        SampleAccumulator &acc) {
    bool want_z = std::find(options.bases.begin(), options.bases.end(), Basis::Z) != options.bases.end();
    bool want_x = std::find(options.bases.begin(), options.bases.end(), Basis::X) != options.bases.end();
    if (options.count_violations && !(options.mi && want_z)) {
        throw std::invalid_argument("violation counting needs MI and the Z basis");
    }
    for (const auto &chain : chains) {
        size_t L = geometries[chain.front()].L;
        size_t stride = options.translation_stride == 0 ? L : options.translation_stride;
        size_t k = chain.size();
        std::vector<double> mi(k, 0), mz(k, 0), mx(k, 0), viol(k, 0);
        uint64_t shifts = 0;
        for (size_t shift = 0; shift < L; shift += stride) {
            std::vector<Region> a_chain, b_chain;
            for (size_t gi : chain) {
                Geometry g = geometries[gi].translated(shift);
                a_chain.push_back(g.a());
                b_chain.push_back(g.b());
            }
            ChainValues v = evaluate(a_chain, b_chain);
            for (size_t j = 0; j < k; j++) {
                if (options.mi) {
                    mi[j] += double(v.mi[j]);
                }
                if (want_z) {
                    mz[j] += double(v.mie_z[j]);
                }
                if (want_x) {
                    mx[j] += double(v.mie_x[j]);
                }
                if (options.count_violations && v.mie_z[j] > v.mi[j]) {
                    viol[j] += 1;
                }
            }
            shifts++;
        }
        double inv = 1.0 / double(shifts);
        for (size_t j = 0; j < k; j++) {
            size_t gi = chain[j];
            if (options.mi) {
                acc.add(observable_key(gi, "mi"), mi[j] * inv, shifts);
            }
            if (want_z) {
                acc.add(observable_key(gi, "mie_z"), mz[j] * inv, shifts);
            }
            if (want_x) {
                acc.add(observable_key(gi, "mie_x"), mx[j] * inv, shifts);
            }
            if (options.count_violations) {
                acc.add(observable_key(gi, "violation"), viol[j] * inv, shifts);
            }
        }
    }
}

ChainEvaluator tableau_evaluator(const Tableau &t, const SampleOptions &options) {
    bool want_z = std::find(options.bases.begin(), options.bases.end(), Basis::Z) != options.bases.end();
    bool want_x = std::find(options.bases.begin(), options.bases.end(), Basis::X) != options.bases.end();
    bool want_mi = options.mi;
    return [&t, want_z, want_x, want_mi](const std::vector<Region> &a_chain, const std::vector<Region> &b_chain) {
        ChainValues v;
        if (want_mi) {
            v.mi = nested_mutual_information_bits(t, a_chain, b_chain);
        }
        if (want_z) {
            v.mie_z = nested_mie_bits(t, a_chain, b_chain, Basis::Z);
        }
        if (want_x) {
            v.mie_x = nested_mie_bits(t, a_chain, b_chain, Basis::X);
        }
        return v;
    };
}

SampleAccumulator sample_ensemble(const CircuitSpec &spec, const std::vector<Geometry> &geometries,
                                  size_t n_trajectories, const SampleOptions &options) {
    spec.validate();
    if (n_trajectories < 1) {
        throw std::invalid_argument("need at least one trajectory");
    }
    for (const Geometry &g : geometries) {
        if (g.L != spec.L) {
            throw std::invalid_argument("geometry ring size differs from the circuit");
        }
    }
    auto chains = nested_chains(geometries);
    SampleAccumulator acc;
    for (size_t k = 0; k < n_trajectories; k++) {
        EventSource source(spec, options.first_trajectory + k);
        Tableau t = Tableau::plus_state(spec.L, source.outcome_seed());
        ChainEvaluator evaluate = tableau_evaluator(t, options);
        drive_schedule(
            spec, source, [&](const std::vector<Event> &events) { apply_events(t, events); },
            [&](size_t, size_t) { record_observables(evaluate, geometries, chains, options, acc); });
    }
    return acc;
}

std::vector<ResultRow> result_rows(const CircuitSpec &spec, const std::vector<Geometry> &geometries,
                                   const SampleAccumulator &acc) {
    struct Kind {
        const char *key, *observable, *basis, *units;
    };
    const Kind kinds[] = {{"mi", "mi", "-", "bits"},
                          {"mie_z", "mie", "z", "bits"},
                          {"mie_x", "mie", "x", "bits"},
                          {"violation", "violation_rate", "z", "fraction"}};
    std::vector<ResultRow> rows;
    for (size_t gi = 0; gi < geometries.size(); gi++) {
        const Geometry &g = geometries[gi];
        for (const Kind &kind : kinds) {
            std::string key = observable_key(gi, kind.key);
            if (!acc.contains(key)) {
                continue;
            }
            const RunningStats &s = acc.at(key);
            ResultRow r;
            r.model = model_name(spec.model);
            r.L = spec.L;
            r.p = spec.p;
            r.basis = kind.basis;
            r.x1 = long(g.x1);
            r.x2 = long(g.x2);
            r.x3 = long(g.x3);
            r.x4 = long(g.x4);
            r.eta = g.eta;
            r.observable = kind.observable;
            r.mean = s.mean();
            r.standard_error = s.standard_error();
            r.n_samples = s.samples;
            r.units = kind.units;
            r.seed = spec.seed;
            rows.push_back(r);
        }
    }
    return rows;
}

}  // namespace mielab
