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

#include <random>

#include "mielab/errors.h"
#include "mielab/percolation_oracle/cluster.h"
#include "mielab/percolation_oracle/cross_validate.h"

using namespace mielab;

using Clusters = std::vector<std::vector<size_t>>;

TEST(cluster, merge_and_split_examples) {
    ClusterPartition p(6);
    p.merge(1, 2);
    EXPECT_EQ(p.clusters(), (Clusters{{0}, {1, 2}, {3}, {4}, {5}}));
    p.merge(2, 3);
    p.split(1);
    EXPECT_EQ(p.clusters(), (Clusters{{0}, {1}, {2, 3}, {4}, {5}}));
    p.split(1);
    EXPECT_EQ(p.clusters(), (Clusters{{0}, {1}, {2, 3}, {4}, {5}}));
    p.merge(3, 2);
    EXPECT_EQ(p.num_clusters(), 5u);
    EXPECT_THROW(p.merge(0, 6), std::out_of_range);
    EXPECT_THROW(p.split(9), std::out_of_range);
}

TEST(cluster, observables_examples) {
    ClusterPartition p(8);
    p.merge(1, 5);
    ClusterObservables o = cluster_observables(p, {1}, {5});
    EXPECT_EQ(o.s1, 1u);
    EXPECT_EQ(o.s2, 0u);
    EXPECT_EQ(o.mi_bits, 2u);
    EXPECT_EQ(o.mie_x_bits, 1u);
    EXPECT_EQ(o.mie_z_bits, 1u);

    p.merge(5, 7);
    o = cluster_observables(p, {1}, {5});
    EXPECT_EQ(o.s1, 0u);
    EXPECT_EQ(o.s2, 1u);
    EXPECT_EQ(o.mi_bits, 1u);
    EXPECT_EQ(o.mie_x_bits, 1u);
    EXPECT_EQ(o.mie_z_bits, 0u);

    o = cluster_observables(p, {0, 2}, {3, 4});
    EXPECT_EQ(o.mi_bits + o.mie_x_bits + o.mie_z_bits, 0u);
    EXPECT_THROW(cluster_observables(p, {1, 2}, {2}), std::invalid_argument);
}

TEST(cluster, random_sequences_keep_a_partition_and_monotone) {
    std::mt19937_64 rng(4);
    const size_t n = 40;
    ClusterPartition p(n);
    std::uniform_int_distribution<size_t> site(0, n - 1);
    for (int step = 0; step < 5000; step++) {
        Clusters before = p.clusters();
        size_t i = site(rng), j = site(rng);
        bool do_merge = rng() % 2;
        if (do_merge) {
            p.merge(i, j);
        } else {
            p.split(i);
        }
        Clusters after = p.clusters();
        size_t total = 0;
        std::vector<int> seen(n, 0);
        for (const auto &c : after) {
            total += c.size();
            for (size_t s : c) {
                seen[s]++;
                EXPECT_EQ(p.cluster_of(s), p.cluster_of(c.front()));
            }
        }
        ASSERT_EQ(total, n);
        for (int k : seen) {
            ASSERT_EQ(k, 1);
        }
        // merge coarsens (every old cluster sits inside a new one), split refines.
        const Clusters &fine = do_merge ? before : after;
        const ClusterPartition *coarse_part = &p;
        if (do_merge) {
            for (const auto &c : fine) {
                for (size_t s : c) {
                    ASSERT_EQ(coarse_part->cluster_of(s), coarse_part->cluster_of(c.front()));
                }
            }
            ASSERT_GE(before.size(), after.size());
            ASSERT_LE(before.size() - after.size(), 1u);
        } else {
            ASSERT_LE(before.size(), after.size());
            ASSERT_LE(after.size() - before.size(), 1u);
        }
    }
}

TEST(cluster, observable_bounds_on_random_partitions) {
    std::mt19937_64 rng(8);
    const size_t n = 24;
    for (int trial = 0; trial < 500; trial++) {
        ClusterPartition p(n);
        for (int k = 0; k < 30; k++) {
            p.merge(rng() % n, rng() % n);
        }
        size_t la = 1 + rng() % 5, lb = 1 + rng() % 5;
        Region a = ring_interval(0, la, n), b = ring_interval(12, lb, n);
        ClusterObservables o = cluster_observables(p, a, b);
        EXPECT_LE(o.s1, std::min(la, lb));
        EXPECT_LE(o.mie_z_bits, o.mie_x_bits);
        EXPECT_LE(o.mie_x_bits, o.mi_bits);
    }
}

TEST(cross_validate, small_rings_agree) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 16, 0.5, 2026);
    std::vector<Geometry> geoms = antipodal_family(16, 1, 3);
    geoms.push_back(Geometry::make(0, 1, 2, 3, 16));
    geoms.push_back(Geometry::make(3, 7, 9, 15, 16));
    CrossValidateOptions opt;
    opt.layers = 10;
    CrossValidateReport r = cross_validate(s, 100, geoms, opt);
    EXPECT_EQ(r.mismatches, 0u) << r.first_mismatch;
    EXPECT_EQ(r.trajectories, 100u);
    EXPECT_EQ(r.comparisons, 100u * 10u * 5u * 3u);
    EXPECT_EQ(r.to_json(), "{\"trajectories\":100,\"comparisons\":15000,\"mismatches\":0}");
}

TEST(cross_validate, agrees_across_measurement_rates) {
    for (double p : {0.0, 0.1, 0.3, 0.7, 1.0}) {
        CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 20, p, 7);
        auto geoms = antipodal_family(20, 1, 5);
        geoms.push_back(Geometry::make(18, 1, 6, 8, 20));
        CrossValidateReport r = cross_validate(s, 20, geoms);
        EXPECT_EQ(r.mismatches, 0u) << "p=" << p << " " << r.first_mismatch;
    }
}

TEST(cross_validate, extreme_rates_give_known_values) {
    auto geoms = std::vector<Geometry>{Geometry::make(0, 1, 8, 9, 16)};
    SampleOptions opt;
    CircuitSpec all_x = CircuitSpec::with_defaults(Model::XZZ, 16, 1.0, 1);
    SampleAccumulator a = sample_ensemble_clusters(all_x, geoms, 3, opt);
    for (const auto &[key, st] : a.all()) {
        EXPECT_EQ(st.sum, 0) << key;
    }
    CircuitSpec all_zz = CircuitSpec::with_defaults(Model::XZZ, 16, 0.0, 1);
    SampleAccumulator b = sample_ensemble_clusters(all_zz, geoms, 3, opt);
    EXPECT_EQ(b.at("g0:mi").mean(), 1.0);
    EXPECT_EQ(b.at("g0:mie_z").mean(), 0.0);
    EXPECT_EQ(b.at("g0:mie_x").mean(), 1.0);
}

TEST(cross_validate, cluster_sampler_matches_engine_sampler) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XZZ, 24, 0.5, 99);
    auto geoms = antipodal_family(24, 1, 4);
    SampleOptions opt;
    opt.translation_stride = 3;
    SampleAccumulator engine = sample_ensemble(s, geoms, 6, opt);
    SampleAccumulator oracle = sample_ensemble_clusters(s, geoms, 6, opt);
    ASSERT_EQ(engine.keys(), oracle.keys());
    for (const auto &key : engine.keys()) {
        EXPECT_EQ(engine.at(key).sum, oracle.at(key).sum) << key;
        EXPECT_EQ(engine.at(key).sumsq, oracle.at(key).sumsq) << key;
        EXPECT_EQ(engine.at(key).samples, oracle.at(key).samples) << key;
    }
}

TEST(cross_validate, rejects_other_models) {
    CircuitSpec s = CircuitSpec::with_defaults(Model::XXZIZ, 16, 0.5, 1);
    EXPECT_THROW(cross_validate(s, 1, antipodal_family(16, 1, 2)), std::invalid_argument);
    ClusterPartition p(4);
    EXPECT_THROW(apply_cluster_event(p, {EventKind::MeasureXX, 0, 1, 0}), std::invalid_argument);
}
