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

#ifndef MIELAB_ANALYSIS_STATS_H
#define MIELAB_ANALYSIS_STATS_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mielab {

/// Running count, sum and sum of squares. `count` is the number of recorded
/// values; `samples` counts the raw evaluations behind them (a value may be
/// an average over several translated placements).
struct RunningStats {
    uint64_t count = 0;
    uint64_t samples = 0;
    double sum = 0;
    double sumsq = 0;

    void add(double value, uint64_t raw_samples = 1) {
        count++;
        samples += raw_samples;
        sum += value;
        sumsq += value * value;
    }
    void merge(const RunningStats &other) {
        count += other.count;
        samples += other.samples;
        sum += other.sum;
        sumsq += other.sumsq;
    }
    double mean() const;
    /// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
    double stddev() const;
    /// stddev / sqrt(count).
    double standard_error() const;
};

/// Keyed RunningStats. Merge is associative and commutative up to
/// floating-point rounding.
class SampleAccumulator {
   public:
    void add(const std::string &key, double value, uint64_t raw_samples = 1) {
        stats_[key].add(value, raw_samples);
    }
    void merge(const SampleAccumulator &other);

    /// Throws std::out_of_range for an unknown key.
    const RunningStats &at(const std::string &key) const;
    bool contains(const std::string &key) const {
        return stats_.count(key) != 0;
    }
    std::vector<std::string> keys() const;
    const std::map<std::string, RunningStats> &all() const {
        return stats_;
    }

   private:
    std::map<std::string, RunningStats> stats_;
};

}  // namespace mielab

#endif
