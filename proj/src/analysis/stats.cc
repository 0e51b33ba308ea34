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

#include "mielab/analysis/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mielab {

double RunningStats::mean() const {
    return count ? sum / double(count) : 0.0;
}

double RunningStats::stddev() const {
    if (count < 2) {
        return 0.0;
    }
    double m = mean();
    double var = (sumsq - double(count) * m * m) / double(count - 1);
    return var > 0 ? std::sqrt(var) : 0.0;
}

double RunningStats::standard_error() const {
    return count ? stddev() / std::sqrt(double(count)) : 0.0;
}

void SampleAccumulator::merge(const SampleAccumulator &other) {
    for (const auto &[key, s] : other.stats_) {
        stats_[key].merge(s);
    }
}

const RunningStats &SampleAccumulator::at(const std::string &key) const {
    auto it = stats_.find(key);
    if (it == stats_.end()) {
        throw std::out_of_range("no samples recorded under key '" + key + "'");
    }
    return it->second;
}

std::vector<std::string> SampleAccumulator::keys() const {
    std::vector<std::string> out;
    for (const auto &entry : stats_) {
        out.push_back(entry.first);
    }
    return out;
}

}  // namespace mielab
