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

#include "mielab/stabilizer_engine/entropy.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "mielab/pauli_gf2/binary_matrix.h"

namespace mielab {

Region make_region(std::vector<size_t> sites, size_t n) {
    std::sort(sites.begin(), sites.end());
    for (size_t i = 0; i < sites.size(); i++) {
        if (sites[i] >= n) {
            throw std::invalid_argument("site " + std::to_string(sites[i]) + " out of range");
        }
        if (i > 0 && sites[i] == sites[i - 1]) {
            throw std::invalid_argument("site " + std::to_string(sites[i]) + " repeated in region");
        }
    }
    return sites;
}

Region ring_interval(size_t start, size_t len, size_t n) {
    if (len > n) {
        throw std::invalid_argument("interval longer than the ring");
    }
    std::vector<size_t> sites;
    for (size_t k = 0; k < len; k++) {
        sites.push_back((start + k) % n);
    }
    std::sort(sites.begin(), sites.end());
    return sites;
}

void require_disjoint(const Region &a, const Region &b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            throw std::invalid_argument("regions overlap at site " + std::to_string(a[i]));
        }
        a[i] < b[j] ? i++ : j++;
    }
}

Region region_union(const Region &a, const Region &b) {
    Region out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Region complement(const Region &a, const Region &b, size_t n) {
    std::vector<char> used(n, 0);
    for (size_t q : a) {
        used.at(q) = 1;
    }
    for (size_t q : b) {
        used.at(q) = 1;
    }
    Region out;
    for (size_t q = 0; q < n; q++) {
        if (!used[q]) {
            out.push_back(q);
        }
    }
    return out;
}

namespace {

bool bit_at(std::span<const uint64_t> words, size_t q) {
    return (words[q / kWordBits] >> (q % kWordBits)) & 1;
}

void check_sites(const Tableau &t, const Region &r) {
    for (size_t q : r) {
        if (q >= t.num_qubits()) {
            throw std::out_of_range("region site out of range");
        }
    }
}

}  // namespace

size_t entropy_bits(const Tableau &t, const Region &a) {
    check_sites(t, a);
    size_t n = t.num_qubits();
    BinaryMatrix m(n, 2 * a.size());
    for (size_t i = 0; i < n; i++) {
        auto xr = t.stab_x(i), zr = t.stab_z(i);
        for (size_t k = 0; k < a.size(); k++) {
            if (bit_at(xr, a[k])) {
                m.set(i, 2 * k, true);
            }
            if (bit_at(zr, a[k])) {
                m.set(i, 2 * k + 1, true);
            }
        }
    }
    return gf2_rank(std::move(m)) - a.size();
}

size_t mutual_information_bits(const Tableau &t, const Region &a, const Region &b) {
    require_disjoint(a, b);
    return entropy_bits(t, a) + entropy_bits(t, b) - entropy_bits(t, region_union(a, b));
}

size_t mie_bits(const Tableau &t, const Region &a, const Region &b, Basis basis, uint64_t seed) {
    check_sites(t, a);
    check_sites(t, b);
    require_disjoint(a, b);
    Tableau work = t;
    work.reseed(seed);
    for (size_t q : complement(a, b, t.num_qubits())) {
        if (basis == Basis::Z) {
            work.measure_z(q);
        } else {
            work.measure_x(q);
        }
    }
    return entropy_bits(work, a);
}

size_t mie_bits_elimination(const Tableau &t, const Region &a, const Region &b, Basis basis) {
    check_sites(t, a);
    check_sites(t, b);
    require_disjoint(a, b);
    size_t n = t.num_qubits();
    Region c = complement(a, b, n);
    BinaryMatrix m(n, c.size() + 2 * a.size());
    for (size_t i = 0; i < n; i++) {
        auto xr = t.stab_x(i), zr = t.stab_z(i);
        auto cr = basis == Basis::Z ? xr : zr;
        for (size_t k = 0; k < c.size(); k++) {
            if (bit_at(cr, c[k])) {
                m.set(i, k, true);
            }
        }
        for (size_t k = 0; k < a.size(); k++) {
            if (bit_at(xr, a[k])) {
                m.set(i, c.size() + 2 * k, true);
            }
            if (bit_at(zr, a[k])) {
                m.set(i, c.size() + 2 * k + 1, true);
            }
        }
    }
    std::vector<size_t> pivots = m.row_reduce();
    size_t c_rank = std::count_if(pivots.begin(), pivots.end(), [&](size_t col) { return col < c.size(); });
    return pivots.size() - c_rank - a.size();
}

}  // namespace mielab
