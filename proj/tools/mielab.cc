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

// mielab command-line driver. Exit codes: 0 ok, 1 runtime error, 2 usage or
// invalid configuration, 3 validation failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mielab/analysis_cli/experiments.h"
#include "mielab/css_analysis/css.h"
#include "mielab/errors.h"
#include "mielab/percolation_oracle/cross_validate.h"
#include "mielab/stabilizer_engine/random_states.h"
#include "mielab/statevector_lab/measurement_entanglement.h"

using namespace mielab;
namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

struct Common {
    size_t L = 0;
    double p = -1;
    uint64_t seed = 1;
    size_t samples = 0;
    std::string basis = "z";
    std::string out = ".";
    std::string config;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--L", c.L, "System size (sites or unit cells)");
    cmd->add_option("--p", c.p, "Measurement rate");
    cmd->add_option("--seed", c.seed, "Ensemble seed");
    cmd->add_option("--samples", c.samples, "Trajectories, states or samples");
    cmd->add_option("--basis", c.basis, "Measurement basis")->check(CLI::IsMember({"z", "x", "u", "v"}));
    cmd->add_option("--out", c.out, "Output directory");
    cmd->add_option("--config", c.config, "Flat JSON file of flag values");
}

std::string out_path(const Common &c, const std::string &name) {
    fs::create_directories(c.out);
    return (fs::path(c.out) / name).string();
}

void print_fit(const PowerLawFit &f) {
    std::printf("fit %-28s exponent %+.4f +- %.4f  r2 %.4f  points %zu\n", f.label.c_str(), f.exponent,
                f.exponent_stderr, f.r_squared, f.n_points);
}

void write_verdict(const Common &c, const nlohmann::ordered_json &v) {
    std::ofstream out(out_path(c, "verdict.json"));
    out << v.dump(2) << '\n';
    std::printf("%s\n", v.dump().c_str());
}

/// Appends "--key value" for config entries not given on the command line.
std::vector<std::string> expand_config(int argc, char **argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string path;
    for (size_t i = 1; i < args.size(); i++) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) {
        return args;
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read config " + path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument("config " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("config must be a flat JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        std::string flag = "--" + key;
        for (char &ch : flag) {
            ch = ch == '_' ? '-' : ch;
        }
        bool given = false;
        for (const auto &a : args) {
            given = given || a == flag || a.rfind(flag + "=", 0) == 0;
        }
        if (given) {
            continue;
        }
        if (value.is_object() || value.is_array() || value.is_null()) {
            throw std::invalid_argument("config value for " + key + " must be a scalar");
        }
        args.push_back(flag);
        args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
    return args;
}

struct CircuitArgs {
    std::string model = "xzz";
    size_t lmin = 2;
    size_t lmax = 0;
    size_t stride = 4;
    size_t t_sample = 0;
    std::string engine = "tableau";
    double wmin = kMiptWindow.min;
    double wmax = kMiptWindow.max;
};

int run_circuit(const Common &c, const CircuitArgs &a, Model model, double default_p) {
    CircuitSpec spec = CircuitSpec::with_defaults(model, c.L ? c.L : 64, c.p >= 0 ? c.p : default_p, c.seed);
    if (a.t_sample) {
        spec.t_sample = a.t_sample;
    }
    spec.validate();
    size_t lmax = a.lmax ? a.lmax : spec.L / 4;
    auto geoms = antipodal_family(spec.L, a.lmin, lmax);
    SampleOptions opt;
    opt.translation_stride = a.stride;
    opt.count_violations = true;
    size_t n = c.samples ? c.samples : 20;
    SampleAccumulator acc;
    if (a.engine == "cluster") {
        acc = sample_ensemble_clusters(spec, geoms, n, opt);
    } else if (a.engine == "tableau") {
        acc = sample_ensemble(spec, geoms, n, opt);
    } else {
        throw std::invalid_argument("engine must be tableau or cluster");
    }
    auto rows = result_rows(spec, geoms, acc);
    write_results_csv(out_path(c, "results.csv"), rows);
    std::vector<PowerLawFit> fits;
    for (const char *obs : {"mi", "mie_x", "mie_z"}) {
        std::string label = model_name(model) + ":" + obs;
        try {
            fits.push_back(fit_geometry_series(geoms, acc, obs, {a.wmin, a.wmax}, label));
            print_fit(fits.back());
        } catch (const FitError &e) {
            std::printf("fit %s skipped: %s\n", label.c_str(), e.what());
        }
    }
    write_fits_json(out_path(c, "fits.json"), fits);
    std::printf("wrote %zu rows for %zu trajectories to %s\n", rows.size(), n, c.out.c_str());
    return 0;
}

struct GroundArgs {
    std::string hamiltonian = "tfim";
    double lambda = 0.428;
    size_t bins = 40;
    double tol = 1e-10;
};

int run_ground_state(const Common &c, const GroundArgs &a) {
    HamiltonianSpec spec = HamiltonianSpec::make(parse_hamiltonian(a.hamiltonian), c.L ? c.L : 12);
    spec.lambda = a.lambda;
    LocalBasis basis = parse_local_basis(c.basis);
    if (spec.local_dim() == 3 && c.basis == "z") {
        basis = LocalBasis::U;
    }
    basis_matrix(basis, spec.local_dim());
    GroundStateOptions go;
    go.seed = c.seed;
    go.tol = a.tol;
    GroundState g = ground_state(spec, go);
    {
        std::ofstream out(out_path(c, "ground_state.json"));
        out << g.summary_json(spec) << '\n';
    }
    std::printf("%s\n", g.summary_json(spec).c_str());
    auto rows = ground_state_rows(spec, g, basis, c.seed);
    write_results_csv(out_path(c, "results.csv"), rows);
    size_t n = spec.num_sites();
    if (a.bins) {
        MieDistribution dist = mie_exact(g.state, {0}, {n / 2}, basis);
        std::ofstream out(out_path(c, "histogram.csv"));
        write_histogram_csv(out, entropy_histogram(dist, a.bins, std::log(double(spec.local_dim()))));
        std::printf("mie at separation %zu: %.6f nats\n", n / 2, dist.mie);
    }
    // Power laws in the separation x over [4, L/4].
    std::map<std::string, std::vector<FitPoint>> series;
    for (const auto &r : rows) {
        if (r.mean > 0) {
            series[r.observable + ":" + r.basis].push_back({double(r.x3), r.mean, 1.0});
        }
    }
    std::vector<PowerLawFit> fits;
    for (const auto &[key, pts] : series) {
        try {
            PowerLawFit f = fit_power_law(pts, 4, double(n) / 4);
            f.label = hamiltonian_name(spec.model) + ":" + key;
            print_fit(f);
            fits.push_back(f);
        } catch (const FitError &) {
        }
    }
    if (fits.empty()) {
        std::printf("separation window [4, %zu] holds too few points for a fit\n", n / 4);
    }
    write_fits_json(out_path(c, "fits.json"), fits);
    return 0;
}

struct HaarArgs {
    size_t layers = 0;
    size_t lmin = 1;
    size_t lmax = 0;
    double wmin = 1e-2;
    double wmax = 0.55;
};

int run_haar(const Common &c, const HaarArgs &a) {
    HaarHybridSpec spec;
    spec.L = c.L ? c.L : 16;
    spec.p = c.p >= 0 ? c.p : 0.17;
    spec.layers = a.layers;
    spec.seed = c.seed;
    auto geoms = antipodal_family(spec.L, a.lmin, a.lmax ? a.lmax : spec.L / 2 - 2);
    size_t n = c.samples ? c.samples : 200;
    SampleAccumulator acc = sample_haar_hybrid(spec, geoms, n);
    write_results_csv(out_path(c, "results.csv"), haar_result_rows(spec, geoms, acc));
    std::vector<PowerLawFit> fits;
    for (const char *obs : {"mi", "mie_z"}) {
        std::string label = std::string("haar:") + obs;
        try {
            fits.push_back(fit_geometry_series(geoms, acc, obs, {a.wmin, a.wmax}, label));
            print_fit(fits.back());
        } catch (const FitError &e) {
            std::printf("fit %s skipped: %s\n", label.c_str(), e.what());
        }
    }
    write_fits_json(out_path(c, "fits.json"), fits);
    return 0;
}

int run_structure(const Common &c) {
    size_t nmax = c.L ? c.L : 24;
    if (nmax < 3) {
        throw std::invalid_argument("structure needs --L >= 3");
    }
    size_t trials = c.samples ? c.samples : 1000;
    std::mt19937_64 rng(c.seed);
    size_t mismatches = 0;
    for (size_t k = 0; k < trials; k++) {
        size_t n = 3 + rng() % (nmax - 2);
        Tableau t = random_css_state(n, 4 * n, rng());
        Tripartition part = random_tripartition(n, rng);
        StructureCounts sc = structure_counts(t, part.a, part.b, part.c);
        bool ok = entropy_bits(t, part.a) == sc.g + sc.g_prime + sc.e_ab + sc.e_ca &&
                  entropy_bits(t, part.b) == sc.g + sc.g_prime + sc.e_ab + sc.e_bc &&
                  entropy_bits(t, region_union(part.a, part.b)) == sc.g + sc.g_prime + sc.e_bc + sc.e_ca &&
                  mutual_information_bits(t, part.a, part.b) == sc.g + sc.g_prime + 2 * sc.e_ab;
        mismatches += !ok;
    }
    nlohmann::ordered_json v;
    v["suite"] = "structure";
    v["trials"] = trials;
    v["mismatches"] = mismatches;
    v["pass"] = mismatches == 0;
    write_verdict(c, v);
    return mismatches == 0 ? 0 : kExitValidation;
}

int run_validate(const Common &c, const std::string &suite) {
    nlohmann::ordered_json v;
    v["suite"] = suite;
    bool pass = false;
    if (suite == "percolation") {
        CircuitSpec spec = CircuitSpec::with_defaults(Model::XZZ, c.L ? c.L : 16, c.p >= 0 ? c.p : 0.5, c.seed);
        auto geoms = antipodal_family(spec.L, 1, std::max<size_t>(1, spec.L / 4));
        geoms.push_back(Geometry::make(0, 1, 2, 3, spec.L));
        CrossValidateOptions opt;
        opt.fatal = false;
        CrossValidateReport r = cross_validate(spec, c.samples ? c.samples : 100, geoms, opt);
        v["trajectories"] = r.trajectories;
        v["comparisons"] = r.comparisons;
        v["mismatches"] = r.mismatches;
        if (!r.first_mismatch.empty()) {
            v["first_mismatch"] = r.first_mismatch;
        }
        pass = r.mismatches == 0;
    } else if (suite == "bound") {
        size_t nmax = c.L ? c.L : 64, trials = c.samples ? c.samples : 1000;
        std::mt19937_64 rng(c.seed);
        size_t violations = 0;
        for (size_t k = 0; k < trials; k++) {
            size_t n = 3 + rng() % (nmax - 2);
            Tableau t = random_css_state(n, 4 * n, rng());
            Tripartition part = random_tripartition(n, rng);
            BoundReport b = check_mie_mi_bound(t, part.a, part.b);
            violations += !b.holds;
        }
        v["trials"] = trials;
        v["violations"] = violations;
        pass = violations == 0;
    } else if (suite == "sampler") {
        HamiltonianSpec spec = HamiltonianSpec::make(HamiltonianModel::IsingCritical, c.L ? c.L : 10);
        GroundState g = ground_state(spec);
        size_t x = spec.L / 2;
        double exact = mie_exact(g.state, {0}, {x}, LocalBasis::Z).mie;
        SampledMie s = mie_sampled(g.state, {0}, {x}, LocalBasis::Z, c.samples ? c.samples : 20000, c.seed);
        v["exact"] = exact;
        v["mean"] = s.mean;
        v["standard_error"] = s.standard_error;
        pass = std::abs(s.mean - exact) <= 3 * s.standard_error;
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "' (percolation, bound, sampler)");
    }
    v["pass"] = pass;
    write_verdict(c, v);
    return pass ? 0 : kExitValidation;
}

int run_fit(const Common &c, const std::string &input, double wmin, double wmax) {
    auto rows = read_results_csv(input);
    auto fits = fit_result_rows(rows, {wmin, wmax});
    for (const auto &f : fits) {
        print_fit(f);
    }
    write_fits_json(out_path(c, "fits.json"), fits);
    std::printf("%zu fits from %zu rows\n", fits.size(), rows.size());
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"mielab: measurement-induced entanglement experiments"};
    app.require_subcommand(1);

    Common common;
    CircuitArgs measure_args, mipt_args;
    mipt_args.model = "clifford";
    GroundArgs ground_args;
    HaarArgs haar_args;
    std::string suite = "percolation", input;
    double fit_wmin = kMiptWindow.min, fit_wmax = kMiptWindow.max;

    auto add_circuit = [&](CLI::App *cmd, CircuitArgs &a) {
        add_common(cmd, common);
        cmd->add_option("--lmin", a.lmin, "Smallest interval length");
        cmd->add_option("--lmax", a.lmax, "Largest interval length (default L/4)");
        cmd->add_option("--stride", a.stride, "Translation stride for averaging (0 = none)");
        cmd->add_option("--t-sample", a.t_sample, "Records per trajectory (default L)");
        cmd->add_option("--wmin", a.wmin, "Fit window lower eta");
        cmd->add_option("--wmax", a.wmax, "Fit window upper eta");
    };
    CLI::App *measure = app.add_subcommand("measure-only", "X-ZZ or XX-ZIZ measurement-only circuits");
    add_circuit(measure, measure_args);
    measure->add_option("--model", measure_args.model, "xzz or xxziz");
    measure->add_option("--engine", measure_args.engine, "tableau or cluster (xzz only)");

    CLI::App *mipt = app.add_subcommand("mipt-clifford", "Hybrid random Clifford circuits");
    add_circuit(mipt, mipt_args);

    CLI::App *ground = app.add_subcommand("ground-state", "Exact critical ground states");
    add_common(ground, common);
    ground->add_option("--hamiltonian", ground_args.hamiltonian, "tfim, of, potts, gspt or cluster");
    ground->add_option("--lambda", ground_args.lambda, "O'Brien-Fendley coupling");
    ground->add_option("--bins", ground_args.bins, "Histogram bins at separation n/2 (0 = none)");
    ground->add_option("--tol", ground_args.tol, "Residual tolerance");

    CLI::App *haar = app.add_subcommand("haar-hybrid", "Haar brickwork with Z measurements");
    add_common(haar, common);
    haar->add_option("--layers", haar_args.layers, "Circuit depth (default 2L)");
    haar->add_option("--lmin", haar_args.lmin, "Smallest interval length");
    haar->add_option("--lmax", haar_args.lmax, "Largest interval length");
    haar->add_option("--wmin", haar_args.wmin, "Fit window lower eta");
    haar->add_option("--wmax", haar_args.wmax, "Fit window upper eta");

    CLI::App *structure = app.add_subcommand("structure", "Structure counts on random CSS states");
    add_common(structure, common);

    CLI::App *validate = app.add_subcommand("validate", "Cross-checks with a pass/fail verdict");
    add_common(validate, common);
    validate->add_option("--suite", suite, "percolation, bound or sampler");

    CLI::App *fit = app.add_subcommand("fit", "Power-law fits of a results.csv against eta");
    add_common(fit, common);
    fit->add_option("--input", input, "results.csv to fit")->required();
    fit->add_option("--wmin", fit_wmin, "Fit window lower eta");
    fit->add_option("--wmax", fit_wmax, "Fit window upper eta");

    std::vector<std::string> args;
    try {
        args = expand_config(argc, argv);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::vector<char *> cargs;
    for (auto &s : args) {
        cargs.push_back(s.data());
    }
    try {
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*measure) {
            Model m = parse_model(measure_args.model);
            if (m == Model::CliffordHybrid) {
                throw std::invalid_argument("measure-only takes xzz or xxziz; use mipt-clifford");
            }
            return run_circuit(common, measure_args, m, 0.5);
        }
        if (*mipt) {
            return run_circuit(common, mipt_args, Model::CliffordHybrid, 0.16);
        }
        if (*ground) {
            return run_ground_state(common, ground_args);
        }
        if (*haar) {
            return run_haar(common, haar_args);
        }
        if (*structure) {
            return run_structure(common);
        }
        if (*validate) {
            return run_validate(common, suite);
        }
        if (*fit) {
            return run_fit(common, input, fit_wmin, fit_wmax);
        }
    } catch (const ValidationError &e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
