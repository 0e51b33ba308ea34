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

#ifndef MIELAB_PERCOLATION_ORACLE_CLUSTER_H
#define MIELAB_PERCOLATION_ORACLE_CLUSTER_H

#include <cstddef>
#include <vector>

#include "mielab/stabilizer_engine/entropy.h"

namespace mielab {

/// Partition of L sites into GHZ clusters. Starts as all singletons (the
/// |+...+> state). Cluster ids are recycled.
class ClusterPartition {
   public:
    explicit ClusterPartition(size_t num_sites);

    size_t num_sites() const {
        return cluster_of_.size();
    }
    size_t cluster_of(size_t site) const;
    const std::vector<size_t> &members(size_t cluster) const;
    size_t num_clusters() const {
        return num_sites() - free_.size();
    }
    /// Member lists, each sorted, in lexicographic order.
    std::vector<std::vector<size_t>> clusters() const;

    /// ZZ measurement: unions the clusters of i and j, smaller into larger.
    void merge(size_t i, size_t j);
    /// X measurement: detaches i into a fresh singleton.
    void split(size_t i);

   private:
    void check(size_t site) const;

    std::vector<size_t> cluster_of_;
    std::vector<size_t> position_;  // index of a site inside its member list
    std::vector<std::vector<size_t>> members_;
    std::vector<size_t> free_;
};

struct ClusterObservables {
    size_t s1 = 0;  // clusters inside A u B meeting both
    size_t s2 = 0;  // clusters meeting A, B and the complement
    size_t mi_bits = 0;
    size_t mie_x_bits = 0;
    size_t mie_z_bits = 0;
};

/// Throws std::invalid_argument for overlapping or out-of-range regions.
ClusterObservables cluster_observables(const ClusterPartition &part, const Region &a, const Region &b);

}  // namespace mielab

#endif
