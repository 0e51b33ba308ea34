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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "mielab/circuit_dynamics/circuit.h"
#include "mielab/circuit_dynamics/geometry.h"
#include "mielab/circuit_dynamics/sampling.h"
#include "mielab/css_analysis/css.h"
#include "mielab/stabilizer_engine/entropy.h"

using namespace mielab;

TEST(geometry, cross_ratio_examples) {
    EXPECT_NEAR(cross_ratio(0, 1, 4, 5, 8), std::pow(std::sin(std::numbers::pi / 8), 2), 1e-12);
    EXPECT_NEAR(cross_ratio(0, 1, 4, 5, 8), 0.146447, 1e-6);
    EXPECT_NEAR(cross_ratio(0, 2, 2, 4, 8), 1.0, 1e-12);
    double small = cross_ratio(0, 1, 500, 501, 1000);
    EXPECT_NEAR(small, 9.87e-6, 0.01e-6);
    // Cyclic relabelling and wrap-around give the same value.
    EXPECT_NEAR(cross_ratio(6, 7, 2, 3, 8), cross_ratio(0, 1, 4, 5, 8), 1e-12);
    EXPECT_NEAR(cross_ratio(7, 1, 3, 5, 8), cross_ratio(0, 2, 4, 6, 8), 1e-12);
}

TEST(geometry, cross_ratio_errors) {
    EXPECT_THROW(cross_ratio(0, 3, 2, 5, 8), std::invalid_argument);
    EXPECT_THROW(cross_ratio(0, 0, 2, 5, 8), std::invalid_argument);
    EXPECT_THROW(cross_ratio(0, 2, 4, 4, 8), std::invalid_argument);
}

TEST(geometry, eta_in_unit_interval) {
    for (size_t x2 = 1; x2 < 12; x2++) {
        for (size_t x3 = x2; x3 < 12; x3++) {
            for (size_t x4 = x3 + 1; x4 <= 12; x4++) {
                double eta = cross_ratio(0, x2, x3, x4, 12);
                EXPECT_GT(eta, 0);
                EXPECT_LE(eta, 1 + 1e-12);
            }
        }
    }
}

TEST(geometry, regions_and_family) {
    Geometry g = Geometry::make(14, 2, 6, 9, 16);
    EXPECT_EQ(g.len_a(), 4u);
    EXPECT_EQ(g.a(), (Region{0, 1, 14, 15}));
    EXPECT_EQ(g.b(), (Region{6, 7, 8}));
    Geometry t = g.translated(3);
    EXPECT_EQ(t.x1, 1u);
    EXPECT_EQ(t.eta, g.eta);
    auto fam = antipodal_family(32, 2, 4);
    ASSERT_EQ(fam.size(), 3u);
    for (const Geometry &f : fam) {
        double s = std::sin(std::numbers::pi * double(f.len_a()) / 32);
        EXPECT_NEAR(f.eta, s * s, 1e-12);
        EXPECT_EQ(f.len_b(), f.len_a());
    }
    EXPECT_THROW(antipodal_family(31, 1, 2), std::invalid_argument);
    EXPECT_THROW(antipodal_family(32, 2, 17), std::invalid_argument);
}

TEST(circuit, model_names) {
    EXPECT_EQ(parse_model("XZZ"), Model::XZZ);
    EXPECT_EQ(parse_model("xx-ziz"), Model::XXZIZ);
    EXPECT_EQ(parse_model("clifford"), Model::CliffordHybrid);
    EXPECT_THROW(parse_model("haar"), std::invalid_argument);
    for (Model m : {Model::XZZ, Model::XXZIZ, Model::CliffordHybrid}) {
        EXPECT_EQ(parse_model(model_name(m)), m);
    }
}

TEST(circuit, spec_validation) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 16, 0.5, 1);
    EXPECT_EQ(s.t_equilibrate, 32u);
    EXPECT_EQ(s.t_sample, 16u);
    EXPECT_NO_THROW(s.validate());
    s.p = 1.5;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s.p = 0.5;
    s.L = 15;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s.L = 16;
    s.t_equilibrate = 0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(circuit, layer_contents) {
    CircuitSpec xzz = CircuitSpec::with_defaults(Model::XZZ, 16, 0.5, 4);
    EventSource src(xzz, 0);
    for (int k = 0; k < 10; k++) {
        Layer layer = src.next();
        EXPECT_TRUE(layer.unitaries.empty());
        for (const Event &e : layer.measurements) {
            if (layer.index % 2 == 1) {
                EXPECT_EQ(e.kind, EventKind::MeasureX);
            } else {
                EXPECT_EQ(e.kind, EventKind::MeasureZZ);
                EXPECT_EQ(e.b, (e.a + 1) % 16);
            }
        }
    }
    CircuitSpec xx = CircuitSpec::with_defaults(Model::XXZIZ, 16, 0.5, 4);
    EventSource src2(xx, 0);
    for (int k = 0; k < 10; k++) {
        Layer layer = src2.next();
        for (const Event &e : layer.measurements) {
            EXPECT_EQ(e.kind, layer.index % 2 == 1 ? EventKind::MeasureXX : EventKind::MeasureZZ);
            EXPECT_EQ(e.b, (e.a + (layer.index % 2 == 1 ? 1 : 2)) % 16);
        }
    }
    CircuitSpec cl = CircuitSpec::with_defaults(Model::CliffordHybrid, 16, 0.0, 4);
    EventSource src3(cl, 0);
    for (int k = 0; k < 4; k++) {
        Layer layer = src3.next();
        ASSERT_EQ(layer.unitaries.size(), 8u);
        EXPECT_TRUE(layer.measurements.empty());
        for (const Event &e : layer.unitaries) {
            EXPECT_EQ(e.a % 2, layer.index % 2 == 1 ? 0u : 1u);
        }
    }
}

TEST(circuit, measurement_rates) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 64, 0.3, 9);
    EventSource src(s, 0);
    size_t odd = 0, even = 0;
    const int pairs = 500;
    for (int k = 0; k < pairs; k++) {
        odd += src.next().measurements.size();
        even += src.next().measurements.size();
    }
    double n = 64.0 * pairs;
    EXPECT_NEAR(odd / n, 0.3, 5 * std::sqrt(0.21 / n));
    EXPECT_NEAR(even / n, 0.7, 5 * std::sqrt(0.21 / n));
}

TEST(circuit, all_x_measurements_give_product_state) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 16, 1.0, 5);
    auto geoms = antipodal_family(16, 1, 4);
    geoms.push_back(Geometry::make(0, 1, 3, 4, 16));
    SampleAccumulator acc = sample_ensemble(s, geoms, 3);
    for (const auto &[key, st] : acc.all()) {
        EXPECT_EQ(st.mean(), 0) << key;
        EXPECT_EQ(st.standard_error(), 0) << key;
        EXPECT_EQ(st.count, 3u * 16u) << key;
    }
}

TEST(circuit, all_zz_measurements_give_global_ghz) {
    for (uint64_t traj = 0; traj < 5; traj++) {
        CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 12, 0.0, 17);
        Tableau t = run_trajectory(s, traj, 2);
        for (size_t b = 1; b < 12; b++) {
            Region a{0}, rb{b};
            EXPECT_EQ(mutual_information_bits(t, a, rb), 1u);
            EXPECT_EQ(mie_bits(t, a, rb, Basis::Z), 0u);
            EXPECT_EQ(mie_bits(t, a, rb, Basis::X), 1u);
        }
    }
}

TEST(circuit, deterministic_replay) {
    for (Model m : {Model::XZZ, Model::XXZIZ, Model::CliffordHybrid}) {
        CircuitSpec s = CircuitSpec::with_defaults(m, 24, 0.3, 99);
        Tableau a = run_trajectory(s, 4);
        Tableau b = run_trajectory(s, 4);
        Tableau c = run_trajectory(s, 5);
        EXPECT_TRUE(a == b);
        EXPECT_EQ(a.snapshot(), b.snapshot());
        EXPECT_FALSE(a == c);
    }
}

TEST(circuit, schedule_records) {
    for (Model m : {Model::XZZ, Model::CliffordHybrid}) {
        CircuitSpec s = CircuitSpec::with_defaults(m, 8, 0.5, 1);
        EventSource src(s, 0);
        std::vector<size_t> layers;
        drive_schedule(
            s, src, [](const std::vector<Event> &) {},
            [&](size_t layer, size_t rec) {
                EXPECT_EQ(rec, layers.size());
                layers.push_back(layer);
            });
        ASSERT_EQ(layers.size(), 8u);
        for (size_t i = 0; i < layers.size(); i++) {
            EXPECT_EQ(layers[i], 16 + 2 * (i + 1));
        }
    }
}

TEST(circuit, measurement_only_models_stay_css) {
    size_t checked = 0;
    for (Model m : {Model::XZZ, Model::XXZIZ}) {
        for (uint64_t traj = 0; traj < 50; traj++) {
            size_t L = traj % 5 == 0 ? 64 : (traj % 2 ? 16 : 32);
            double p = 0.2 + 0.6 * double(traj % 7) / 6;
            CircuitSpec s = CircuitSpec::with_defaults(m, L, p, 2024);
            EventSource src(s, traj);
            Tableau t = Tableau::plus_state(L, src.outcome_seed());
            for (size_t k = 0; k < 2 * L; k++) {
                Layer layer = src.next();
                apply_events(t, layer.measurements);
                // Outcome -1 leaves local sign flips; single-site Z gates remove them.
                SignReport r = is_sign_free(t);
                ASSERT_TRUE(r.css_structure) << model_name(m) << " traj " << traj << " layer " << layer.index;
                Tableau fixed = t;
                for (size_t q : r.repairs) {
                    fixed.z(q);
                }
                ASSERT_TRUE(is_sign_free(fixed).sign_free);
                checked++;
            }
            Geometry g = antipodal_family(L, L / 8, L / 8).front();
            BoundReport bound;
            ASSERT_NO_THROW(bound = check_mie_mi_bound(t, g.a(), g.b()));
            EXPECT_TRUE(bound.holds);
        }
    }
    EXPECT_GT(checked, 0u);
}

TEST(sampling, nested_chain_grouping) {
    std::vector<Geometry> g = antipodal_family(32, 1, 5);
    g.push_back(Geometry::make(3, 4, 10, 11, 32));
    g.push_back(Geometry::make(0, 4, 16, 18, 32));
    auto chains = nested_chains(g);
    ASSERT_EQ(chains.size(), 3u);
    EXPECT_EQ(chains[0], (std::vector<size_t>{0, 1, 2, 3, 4}));
    EXPECT_EQ(chains[1], (std::vector<size_t>{6}));
    EXPECT_EQ(chains[2], (std::vector<size_t>{5}));
}

TEST(sampling, chained_values_match_direct_evaluation) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::CliffordHybrid, 24, 0.2, 8);
    Tableau t = run_trajectory(s, 0);
    auto geoms = antipodal_family(24, 1, 6);
    geoms.push_back(Geometry::make(5, 7, 13, 20, 24));
    SampleOptions opt;
    opt.translation_stride = 5;
    SampleAccumulator acc;
    record_observables(tableau_evaluator(t, opt), geoms, nested_chains(geoms), opt, acc);
    for (size_t gi = 0; gi < geoms.size(); gi++) {
        double mi = 0, mz = 0, mx = 0;
        int shifts = 0;
        for (size_t sh = 0; sh < 24; sh += 5, shifts++) {
            Geometry g = geoms[gi].translated(sh);
            mi += double(mutual_information_bits(t, g.a(), g.b()));
            mz += double(mie_bits_elimination(t, g.a(), g.b(), Basis::Z));
            mx += double(mie_bits_elimination(t, g.a(), g.b(), Basis::X));
        }
        EXPECT_NEAR(acc.at(observable_key(gi, "mi")).mean(), mi / shifts, 1e-12);
        EXPECT_NEAR(acc.at(observable_key(gi, "mie_z")).mean(), mz / shifts, 1e-12);
        EXPECT_NEAR(acc.at(observable_key(gi, "mie_x")).mean(), mx / shifts, 1e-12);
        EXPECT_EQ(acc.at(observable_key(gi, "mi")).samples, uint64_t(shifts));
    }
}

TEST(sampling, merge_equals_union) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XXZIZ, 16, 0.5, 31);
    auto geoms = antipodal_family(16, 1, 4);
    SampleOptions first, second;
    second.first_trajectory = 4;
    SampleAccumulator a = sample_ensemble(s, geoms, 4, first);
    a.merge(sample_ensemble(s, geoms, 3, second));
    SampleAccumulator whole = sample_ensemble(s, geoms, 7, first);
    ASSERT_EQ(a.keys(), whole.keys());
    for (const auto &key : whole.keys()) {
        EXPECT_EQ(a.at(key).count, whole.at(key).count);
        EXPECT_EQ(a.at(key).sum, whole.at(key).sum);
        EXPECT_EQ(a.at(key).sumsq, whole.at(key).sumsq);
    }
}

TEST(sampling, translation_invariance) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 32, 0.5, 77);
    Geometry g = Geometry::make(0, 3, 12, 15, 32);
    std::vector<Geometry> geoms{g, g.translated(7), g.translated(19)};
    SampleAccumulator acc = sample_ensemble(s, geoms, 150);
    for (const char *obs : {"mi", "mie_z", "mie_x"}) {
        const RunningStats &ref = acc.at(observable_key(0, obs));
        for (size_t gi = 1; gi < 3; gi++) {
            const RunningStats &other = acc.at(observable_key(gi, obs));
            double se = std::hypot(ref.standard_error(), other.standard_error());
            EXPECT_LE(std::abs(ref.mean() - other.mean()), 3 * se) << obs << " g" << gi;
        }
    }
}

TEST(sampling, violations_counted_for_clifford_hybrid) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::CliffordHybrid, 16, 0.1, 3);
    auto geoms = antipodal_family(16, 2, 4);
    SampleOptions opt;
    opt.count_violations = true;
    SampleAccumulator acc = sample_ensemble(s, geoms, 2, opt);
    for (size_t gi = 0; gi < geoms.size(); gi++) {
        const RunningStats &v = acc.at(observable_key(gi, "violation"));
        EXPECT_GE(v.mean(), 0);
        EXPECT_LE(v.mean(), 1);
    }
    SampleOptions bad;
    bad.count_violations = true;
    bad.bases = {Basis::X};
    EXPECT_THROW(sample_ensemble(s, geoms, 1, bad), std::invalid_argument);
}

TEST(sampling, result_rows_schema) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 16, 0.5, 12);
    auto geoms = antipodal_family(16, 1, 3);
    SampleAccumulator acc = sample_ensemble(s, geoms, 2);
    auto rows = result_rows(s, geoms, acc);
    ASSERT_EQ(rows.size(), 9u);
    EXPECT_EQ(rows[0].observable, "mi");
    EXPECT_EQ(rows[0].basis, "-");
    EXPECT_EQ(rows[1].basis, "z");
    EXPECT_EQ(rows[2].basis, "x");
    EXPECT_EQ(rows[0].n_samples, 32u);
    EXPECT_EQ(rows[0].seed, 12u);
    EXPECT_EQ(rows[0].units, "bits");
    std::stringstream ss;
    write_results_csv(ss, rows);
    EXPECT_EQ(read_results_csv(ss).size(), 9u);
}
