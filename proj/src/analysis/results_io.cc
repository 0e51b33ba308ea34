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

#include "mielab/analysis/results_io.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mielab {

const char *const kResultsHeader = "model,L,p,basis,x1,x2,x3,x4,eta,observable,mean,stderr,n_samples,units,seed";

void write_results_csv(std::ostream &out, const std::vector<ResultRow> &rows) {
    out << kResultsHeader << "\n";
    out << std::setprecision(17);
    for (const ResultRow &r : rows) {
        out << r.model << ',' << r.L << ',' << r.p << ',' << r.basis << ',' << r.x1 << ',' << r.x2 << ',' << r.x3
            << ',' << r.x4 << ',' << r.eta << ',' << r.observable << ',' << r.mean << ',' << r.standard_error << ','
            << r.n_samples << ',' << r.units << ',' << r.seed << "\n";
    }
}

void write_results_csv(const std::string &path, const std::vector<ResultRow> &rows) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    write_results_csv(out, rows);
}

std::vector<ResultRow> read_results_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kResultsHeader) {
        throw std::runtime_error("results CSV header mismatch");
    }
    std::vector<ResultRow> rows;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != 15) {
            throw std::runtime_error("results CSV line " + std::to_string(line_no) + " has " +
                                     std::to_string(f.size()) + " fields");
        }
        try {
            ResultRow r;
            r.model = f[0];
            r.L = std::stoul(f[1]);
            r.p = std::stod(f[2]);
            r.basis = f[3];
            r.x1 = std::stol(f[4]);
            r.x2 = std::stol(f[5]);
            r.x3 = std::stol(f[6]);
            r.x4 = std::stol(f[7]);
            r.eta = std::stod(f[8]);
            r.observable = f[9];
            r.mean = std::stod(f[10]);
            r.standard_error = std::stod(f[11]);
            r.n_samples = std::stoull(f[12]);
            r.units = f[13];
            r.seed = std::stoull(f[14]);
            rows.push_back(r);
        } catch (const std::logic_error &) {
            throw std::runtime_error("results CSV line " + std::to_string(line_no) + " is malformed");
        }
    }
    return rows;
}

std::vector<ResultRow> read_results_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    return read_results_csv(in);
}

void convert_bits_to_nats(ResultRow &row) {
    if (row.units != "bits") {
        return;
    }
    row.mean *= std::log(2.0);
    row.standard_error *= std::log(2.0);
    row.units = "nats";
}

}  // namespace mielab
