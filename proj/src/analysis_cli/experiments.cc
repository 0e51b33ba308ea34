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

#include "mielab/analysis_cli/experiments.h"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "mielab/circuit_dynamics/sampling.h"
#include "mielab/statevector_lab/measurement_entanglement.h"

namespace mielab {

PowerLawFit fit_geometry_series(const std::vector<Geometry> &geometries, const SampleAccumulator &acc,
                                const std::string &observable, FitWindow window, const std::string &label) {
    std::vector<FitPoint> points;
    for (size_t g = 0; g < geometries.size(); g++) {
        const RunningStats &st = acc.at(observable_key(g, observable));
        points.push_back({geometries[g].eta, st.mean(), log_weight(st.mean(), st.standard_error())});
    }
    PowerLawFit fit = fit_power_law(points, window.min, window.max);
    fit.label = label;
    return fit;
}

std::vector<PowerLawFit> fit_result_rows(const std::vector<ResultRow> &rows, FitWindow window) {
    using Key = std::tuple<std::string, size_t, double, std::string, std::string>;
    std::map<Key, std::vector<FitPoint>> groups;
    for (const ResultRow &r : rows) {
        groups[{r.model, r.L, r.p, r.observable, r.basis}].push_back(
            {r.eta, r.mean, log_weight(r.mean, r.standard_error)});
    }
    std::vector<PowerLawFit> fits;
    for (const auto &[key, points] : groups) {
        const auto &[model, L, p, observable, basis] = key;
        try {
            PowerLawFit f = fit_power_law(points, window.min, window.max);
            std::ostringstream label;
            label << model << ":L=" << L << ":p=" << p << ":" << observable << ":" << basis;
            f.label = label.str();
            fits.push_back(f);
        } catch (const FitError &) {
        }
    }
    return fits;
}

std::vector<ResultRow> haar_result_rows(const HaarHybridSpec &spec, const std::vector<Geometry> &geometries,
                                        const SampleAccumulator &acc) {
    std::vector<ResultRow> rows;
    for (size_t g = 0; g < geometries.size(); g++) {
        const Geometry &geo = geometries[g];
        for (const char *obs : {"mi", "mie_z"}) {
            const RunningStats &st = acc.at(observable_key(g, obs));
            ResultRow r;
            r.model = "haar";
            r.L = spec.L;
            r.p = spec.p;
            r.basis = std::string(obs) == "mi" ? "-" : "z";
            r.x1 = long(geo.x1);
            r.x2 = long(geo.x2);
            r.x3 = long(geo.x3);
            r.x4 = long(geo.x4);
            r.eta = geo.eta;
            r.observable = std::string(obs) == "mi" ? "mi" : "mie";
            r.mean = st.mean();
            r.standard_error = st.standard_error();
            r.n_samples = st.samples;
            r.units = "nats";
            r.seed = spec.seed;
            rows.push_back(r);
        }
    }
    return rows;
}

std::vector<ResultRow> ground_state_rows(const HamiltonianSpec &spec, const GroundState &g, LocalBasis basis,
                                         uint64_t seed) {
    const DenseState &s = g.state;
    size_t n = s.num_sites();
    std::string b(1, local_basis_char(basis));
    std::vector<ResultRow> rows;
    for (size_t x = 1; x <= n / 2; x++) {
        ResultRow base;
        base.model = hamiltonian_name(spec.model);
        base.L = spec.L;
        base.p = 0;
        base.x1 = 0;
        base.x2 = 1;
        base.x3 = long(x);
        base.x4 = long(x + 1);
        base.eta = x + 1 < n ? cross_ratio(0, 1, x, x + 1, n) : 1.0;
        base.n_samples = 0;
        base.units = "nats";
        base.seed = seed;
        auto add = [&](const std::string &obs, const std::string &basis_col, double value, const char *units) {
            ResultRow r = base;
            r.observable = obs;
            r.basis = basis_col;
            r.mean = value;
            r.units = units;
            rows.push_back(r);
        };
        add("mie", b, mie_exact(s, {0}, {x}, basis).mie, "nats");
        add("mi", "-", mutual_information_nats(s, {0}, {x}), "nats");
        try {
            add("fmie", b, fmie(s, {0}, {x}, basis), "nats");
        } catch (const std::invalid_argument &) {
        }
        if (s.local_dim() == 2) {
            MicResult m = mic_exact(s, 0, x, LocalBasis::Z);
            add("mic", "z", m.mic, "dimensionless");
            add("xx_correlator", "-", m.xx, "dimensionless");
            add("yy_abs_correlator", "-", m.yy_abs, "dimensionless");
        } else {
            Eigen::MatrixXcd u = potts_u();
            add("uu_correlator", "-", correlator(s, u.adjoint(), 0, u, x), "dimensionless");
        }
    }
    return rows;
}

void write_fits_json(const std::string &path, const std::vector<PowerLawFit> &fits) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &f : fits) {
        arr.push_back(f.to_json());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << arr.dump(2) << '\n';
}

}  // namespace mielab
