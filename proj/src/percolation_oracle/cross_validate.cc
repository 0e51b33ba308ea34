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

#include "mielab/percolation_oracle/cross_validate.h"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mielab/errors.h"
#include "mielab/stabilizer_engine/nested_observables.h"

namespace mielab {

void apply_cluster_event(ClusterPartition &part, const Event &e) {
    switch (e.kind) {
        case EventKind::MeasureX:
            part.split(e.a);
            return;
        case EventKind::MeasureZZ:
            part.merge(e.a, e.b);
            return;
        default:
            throw std::invalid_argument("cluster oracle handles only X and ZZ measurements");
    }
}

std::string CrossValidateReport::to_json() const {
    nlohmann::ordered_json j;
    j["trajectories"] = trajectories;
    j["comparisons"] = comparisons;
    j["mismatches"] = mismatches;
    return j.dump();
}

CrossValidateReport cross_validate(const CircuitSpec &spec, size_t n_trajectories,
                                   const std::vector<Geometry> &geometries, const CrossValidateOptions &options) {
    spec.validate();
    if (spec.model != Model::XZZ) {
        throw std::invalid_argument("cross validation needs the xzz model");
    }
    if (options.compare_every < 1) {
        throw std::invalid_argument("compare_every must be at least 1");
    }
    auto chains = nested_chains(geometries);
    size_t layers = options.layers ? options.layers : spec.t_equilibrate;
    CrossValidateReport report;
    for (uint64_t traj = 0; traj < n_trajectories; traj++) {
        EventSource source(spec, traj);
        Tableau t = Tableau::plus_state(spec.L, source.outcome_seed());
        ClusterPartition part(spec.L);
        for (size_t k = 1; k <= layers; k++) {
            Layer layer = source.next();
            for (const Event &e : layer.measurements) {
                apply_event(t, e);
                apply_cluster_event(part, e);
            }
            if (k % options.compare_every != 0 && k != layers) {
                continue;
            }
            for (const auto &chain : chains) {
                std::vector<Region> a_chain, b_chain;
                for (size_t gi : chain) {
                    a_chain.push_back(geometries[gi].a());
                    b_chain.push_back(geometries[gi].b());
                }
                auto mi = nested_mutual_information_bits(t, a_chain, b_chain);
                auto mx = nested_mie_bits(t, a_chain, b_chain, Basis::X);
                auto mz = nested_mie_bits(t, a_chain, b_chain, Basis::Z);
                for (size_t j = 0; j < chain.size(); j++) {
                    ClusterObservables o = cluster_observables(part, a_chain[j], b_chain[j]);
                    const size_t engine[3] = {mi[j], mx[j], mz[j]};
                    const size_t oracle[3] = {o.mi_bits, o.mie_x_bits, o.mie_z_bits};
                    const char *names[3] = {"mi", "mie_x", "mie_z"};
                    for (int q = 0; q < 3; q++) {
                        report.comparisons++;
                        if (engine[q] == oracle[q]) {
                            continue;
                        }
                        report.mismatches++;
                        if (report.first_mismatch.empty()) {
                            const Geometry &g = geometries[chain[j]];
                            std::ostringstream msg;
                            msg << names[q] << " engine=" << engine[q] << " oracle=" << oracle[q]
                                << " trajectory=" << traj << " seed=" << source.seed() << " layer=" << k
                                << " geometry=(" << g.x1 << "," << g.x2 << "," << g.x3 << "," << g.x4 << ")";
                            report.first_mismatch = msg.str();
                        }
                        if (options.fatal) {
                            throw ValidationError("oracle mismatch: " + report.first_mismatch);
                        }
                    }
                }
            }
        }
        report.trajectories++;
    }
    return report;
}

ChainEvaluator cluster_evaluator(const ClusterPartition &part) {
    return [&part](const std::vector<Region> &a_chain, const std::vector<Region> &b_chain) {
        ChainValues v;
        for (size_t j = 0; j < a_chain.size(); j++) {
            ClusterObservables o = cluster_observables(part, a_chain[j], b_chain[j]);
            v.mi.push_back(o.mi_bits);
            v.mie_z.push_back(o.mie_z_bits);
            v.mie_x.push_back(o.mie_x_bits);
        }
        return v;
    };
}

SampleAccumulator sample_ensemble_clusters(const CircuitSpec &spec, const std::vector<Geometry> &geometries,
                                           size_t n_trajectories, const SampleOptions &options) {
    spec.validate();
    if (spec.model != Model::XZZ) {
        throw std::invalid_argument("the cluster representation covers only the xzz model");
    }
    if (n_trajectories < 1) {
        throw std::invalid_argument("need at least one trajectory");
    }
    auto chains = nested_chains(geometries);
    SampleAccumulator acc;
    for (size_t k = 0; k < n_trajectories; k++) {
        EventSource source(spec, options.first_trajectory + k);
        ClusterPartition part(spec.L);
        ChainEvaluator evaluate = cluster_evaluator(part);
        drive_schedule(
            spec, source,
            [&](const std::vector<Event> &events) {
                for (const Event &e : events) {
                    apply_cluster_event(part, e);
                }
            },
            [&](size_t, size_t) { record_observables(evaluate, geometries, chains, options, acc); });
    }
    return acc;
}

}  // namespace mielab
