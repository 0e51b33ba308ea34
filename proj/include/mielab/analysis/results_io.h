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

#ifndef MIELAB_ANALYSIS_RESULTS_IO_H
#define MIELAB_ANALYSIS_RESULTS_IO_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mielab {

/// One row of results.csv.
struct ResultRow {
    std::string model;
    size_t L = 0;
    double p = 0;
    std::string basis;  // "z", "x", "u", "v" or "-" for basis-free observables
    long x1 = 0, x2 = 0, x3 = 0, x4 = 0;
    double eta = 0;
    std::string observable;
    double mean = 0;
    double standard_error = 0;
    uint64_t n_samples = 0;
    std::string units;  // "bits" or "nats"
    uint64_t seed = 0;
};

extern const char *const kResultsHeader;

void write_results_csv(std::ostream &out, const std::vector<ResultRow> &rows);
void write_results_csv(const std::string &path, const std::vector<ResultRow> &rows);
/// Throws std::runtime_error on a header or field mismatch.
std::vector<ResultRow> read_results_csv(std::istream &in);
std::vector<ResultRow> read_results_csv(const std::string &path);

/// bits -> nats conversion of a row in place (mean and stderr scale by ln 2).
void convert_bits_to_nats(ResultRow &row);

}  // namespace mielab

#endif
