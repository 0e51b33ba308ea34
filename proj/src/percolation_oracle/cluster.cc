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

#include "mielab/percolation_oracle/cluster.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mielab/errors.h"

namespace mielab {

ClusterPartition::ClusterPartition(size_t num_sites)
    : cluster_of_(num_sites), position_(num_sites, 0), members_(num_sites) {
    for (size_t i = 0; i < num_sites; i++) {
        cluster_of_[i] = i;
        members_[i] = {i};
    }
}

void ClusterPartition::check(size_t site) const {
    if (site >= num_sites()) {
        throw std::out_of_range("site " + std::to_string(site) + " outside ring of " + std::to_string(num_sites()));
    }
}

size_t ClusterPartition::cluster_of(size_t site) const {
    check(site);
    return cluster_of_[site];
}

const std::vector<size_t> &ClusterPartition::members(size_t cluster) const {
    if (cluster >= members_.size() || members_[cluster].empty()) {
        throw std::out_of_range("no cluster " + std::to_string(cluster));
    }
    return members_[cluster];
}

std::vector<std::vector<size_t>> ClusterPartition::clusters() const {
    std::vector<std::vector<size_t>> out;
    for (const auto &m : members_) {
        if (!m.empty()) {
            out.push_back(m);
            std::sort(out.back().begin(), out.back().end());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void ClusterPartition::merge(size_t i, size_t j) {
    check(i);
    check(j);
    size_t ci = cluster_of_[i], cj = cluster_of_[j];
    if (ci == cj) {
        return;
    }
    if (members_[ci].size() < members_[cj].size()) {
        std::swap(ci, cj);
    }
    auto &into = members_[ci];
    for (size_t s : members_[cj]) {
        cluster_of_[s] = ci;
        position_[s] = into.size();
        into.push_back(s);
    }
    members_[cj].clear();
    free_.push_back(cj);
}

void ClusterPartition::split(size_t i) {
    check(i);
    size_t c = cluster_of_[i];
    auto &m = members_[c];
    if (m.size() == 1) {
        return;
    }
    size_t last = m.back();
    m[position_[i]] = last;
    position_[last] = position_[i];
    m.pop_back();
    size_t fresh = free_.back();
    free_.pop_back();
    members_[fresh] = {i};
    cluster_of_[i] = fresh;
    position_[i] = 0;
}

ClusterObservables cluster_observables(const ClusterPartition &part, const Region &a, const Region &b) {
    require_disjoint(a, b);
    // (cluster, 0 for A / 1 for B) for every site, grouped by cluster.
    std::vector<std::pair<size_t, int>> tags;
    tags.reserve(a.size() + b.size());
    for (size_t s : a) {
        tags.push_back({part.cluster_of(s), 0});
    }
    for (size_t s : b) {
        tags.push_back({part.cluster_of(s), 1});
    }
    std::sort(tags.begin(), tags.end());
    ClusterObservables o;
    for (size_t i = 0; i < tags.size();) {
        size_t j = i;
        size_t in_a = 0;
        while (j < tags.size() && tags[j].first == tags[i].first) {
            in_a += tags[j].second == 0;
            j++;
        }
        size_t total = j - i;
        if (in_a > 0 && in_a < total) {
            if (total == part.members(tags[i].first).size()) {
                o.s1++;
            } else {
                o.s2++;
            }
        }
        i = j;
    }
    o.mi_bits = 2 * o.s1 + o.s2;
    o.mie_x_bits = o.s1 + o.s2;
    o.mie_z_bits = o.s1;
    if (o.s1 > std::min(a.size(), b.size()) || !(o.mie_z_bits <= o.mie_x_bits && o.mie_x_bits <= o.mi_bits)) {
        throw ValidationError("cluster observables out of order");
    }
    return o;
}

}  // namespace mielab
