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

#include "mielab/css_analysis/css.h"

#include <json.hpp>

#include "mielab/errors.h"
#include "mielab/pauli_gf2/binary_matrix.h"

namespace mielab {
namespace {

struct Reduction {
    std::vector<PauliString> x_rows;  // after X-block elimination, before Z cleanup
    std::vector<size_t> x_pivots;
    std::vector<PauliString> x_clean;  // pure-X images; empty if not CSS
    std::vector<PauliString> z_rows;
    std::optional<size_t> not_css_row;
    std::vector<size_t> negative_rows;
};

/// Full reduction of rows[begin, end) on the chosen bit plane. Returns the
/// pivot columns; reduced rows occupy [begin, begin + pivots.size()).
std::vector<size_t> reduce_rows(std::vector<PauliString> &rows, size_t begin, bool use_x) {
    size_t n = rows.empty() ? 0 : rows[0].num_qubits();
    std::vector<size_t> pivots;
    size_t next = begin;
    for (size_t c = 0; c < n && next < rows.size(); c++) {
        auto has = [&](const PauliString &p) { return use_x ? p.xs[c] : p.zs[c]; };
        size_t found = next;
        while (found < rows.size() && !has(rows[found])) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[found], rows[next]);
        for (size_t r = begin; r < rows.size(); r++) {
            if (r != next && has(rows[r])) {
                rows[r] = pauli_mul(rows[r], rows[next]);
            }
        }
        pivots.push_back(c);
        next++;
    }
    return pivots;
}

Reduction reduce(const Tableau &t) {
    Reduction red;
    std::vector<PauliString> rows = t.stabilizers();
    red.x_pivots = reduce_rows(rows, 0, true);
    size_t nx = red.x_pivots.size();
    std::vector<size_t> z_pivots = reduce_rows(rows, nx, false);
    red.x_rows.assign(rows.begin(), rows.begin() + nx);
    red.z_rows.assign(rows.begin() + nx, rows.end());

    for (size_t k = 0; k < nx; k++) {
        PauliString h = red.x_rows[k];
        for (size_t j = 0; j < z_pivots.size(); j++) {
            if (h.zs[z_pivots[j]]) {
                h = pauli_mul(h, red.z_rows[j]);
            }
        }
        if (!h.zs.none()) {
            red.not_css_row = k;
            red.x_clean.clear();
            return red;
        }
        if (!h.has_real_phase()) {
            throw ValidationError("stabilizer group element with imaginary phase");
        }
        if (h.phase == 2) {
            red.negative_rows.push_back(k);
        }
        red.x_clean.push_back(h);
    }
    return red;
}

void require_partition(const Region &a, const Region &b, const Region &c, size_t n) {
    std::vector<int> hits(n, 0);
    for (const Region *r : {&a, &b, &c}) {
        for (size_t q : *r) {
            if (q >= n) {
                throw std::invalid_argument("region site out of range");
            }
            hits[q]++;
        }
    }
    for (size_t q = 0; q < n; q++) {
        if (hits[q] != 1) {
            throw std::invalid_argument("regions do not partition the qubits at site " + std::to_string(q));
        }
    }
}

BinaryMatrix plane_matrix(const std::vector<PauliString> &rows, bool use_x, size_t n) {
    BinaryMatrix m(rows.size(), n);
    for (size_t r = 0; r < rows.size(); r++) {
        const BitVector &bits = use_x ? rows[r].xs : rows[r].zs;
        std::copy(bits.words().begin(), bits.words().end(), m.row(r).begin());
    }
    return m;
}

/// Rank of h restricted to `cols`.
size_t restricted_rank(const BinaryMatrix &h, const Region &cols) {
    BinaryMatrix m(h.rows(), cols.size());
    for (size_t r = 0; r < h.rows(); r++) {
        for (size_t k = 0; k < cols.size(); k++) {
            if (h.get(r, cols[k])) {
                m.set(r, k, true);
            }
        }
    }
    return gf2_rank(std::move(m));
}

/// Appends to `out` a basis of {v in rowspace(h) : v vanishes on alpha}.
void append_vanishing_basis(const BinaryMatrix &h, const Region &alpha, const Region &rest, BinaryMatrix &out) {
    std::vector<size_t> order(alpha);
    order.insert(order.end(), rest.begin(), rest.end());
    BinaryMatrix m(h.rows(), order.size());
    for (size_t r = 0; r < h.rows(); r++) {
        for (size_t k = 0; k < order.size(); k++) {
            if (h.get(r, order[k])) {
                m.set(r, k, true);
            }
        }
    }
    std::vector<size_t> pivots = m.row_reduce();
    for (size_t i = 0; i < pivots.size(); i++) {
        if (pivots[i] < alpha.size()) {
            continue;
        }
        BitVector v(h.cols());
        for (size_t k = alpha.size(); k < order.size(); k++) {
            if (m.get(i, k)) {
                v.set(order[k], true);
            }
        }
        out.append_row(v);
    }
}

size_t colocal_dim(const BinaryMatrix &h, const Region &a, const Region &b, const Region &c) {
    BinaryMatrix stacked(0, h.cols());
    append_vanishing_basis(h, a, region_union(b, c), stacked);
    append_vanishing_basis(h, b, region_union(a, c), stacked);
    append_vanishing_basis(h, c, region_union(a, b), stacked);
    return gf2_rank(std::move(stacked));
}

}  // namespace

CssForm css_canonical_form(const Tableau &t) {
    Reduction red = reduce(t);
    if (red.not_css_row) {
        throw NotCssError("no pure-X/pure-Z generating set; offending generator " +
                          red.x_rows[*red.not_css_row].str());
    }
    CssForm form;
    for (size_t k : red.negative_rows) {
        form.repairs.push_back(red.x_pivots[k]);
    }
    for (PauliString &h : red.x_clean) {
        h.phase = 0;
        form.x_generators.push_back(std::move(h));
    }
    form.z_generators = std::move(red.z_rows);
    return form;
}

SignReport is_sign_free(const Tableau &t) {
    Reduction red = reduce(t);
    SignReport report;
    if (red.not_css_row) {
        report.violating = red.x_rows[*red.not_css_row];
        return report;
    }
    report.css_structure = true;
    for (size_t k : red.negative_rows) {
        report.repairs.push_back(red.x_pivots[k]);
    }
    report.sign_free = red.negative_rows.empty();
    if (!report.sign_free) {
        report.violating = red.x_rows[red.negative_rows.front()];
    }
    return report;
}

std::string StructureCounts::to_json() const {
    nlohmann::ordered_json j;
    j["g"] = g;
    j["g_prime"] = g_prime;
    j["e_ab"] = e_ab;
    j["e_bc"] = e_bc;
    j["e_ca"] = e_ca;
    j["s_a"] = s_a;
    j["s_b"] = s_b;
    j["s_c"] = s_c;
    j["s_a_prime"] = s_a_prime;
    j["s_b_prime"] = s_b_prime;
    j["s_c_prime"] = s_c_prime;
    j["n_x"] = n_x;
    j["n_z"] = n_z;
    return j.dump();
}

StructureCounts structure_counts(const Tableau &t, const Region &a, const Region &b, const Region &c) {
    size_t n = t.num_qubits();
    require_partition(a, b, c, n);
    CssForm form = css_canonical_form(t);
    BinaryMatrix hx = plane_matrix(form.x_generators, true, n);
    BinaryMatrix hz = plane_matrix(form.z_generators, false, n);

    StructureCounts sc;
    sc.n_x = form.n_x();
    sc.n_z = form.n_z();
    sc.g = sc.n_x - colocal_dim(hx, a, b, c);
    sc.g_prime = sc.n_z - colocal_dim(hz, a, b, c);

    Region bc = region_union(b, c), ca = region_union(c, a), ab = region_union(a, b);
    sc.s_a = sc.n_z - restricted_rank(hz, bc);
    sc.s_b = sc.n_z - restricted_rank(hz, ca);
    sc.s_c = sc.n_z - restricted_rank(hz, ab);
    sc.s_a_prime = sc.n_x - restricted_rank(hx, bc);
    sc.s_b_prime = sc.n_x - restricted_rank(hx, ca);
    sc.s_c_prime = sc.n_x - restricted_rank(hx, ab);

    auto pair_count = [&](const Region &p, const Region &q) {
        long twice = long(mutual_information_bits(t, p, q)) - long(sc.g) - long(sc.g_prime);
        if (twice < 0 || twice % 2 != 0) {
            throw ValidationError("pair count is not a nonnegative integer: " + std::to_string(twice) + "/2");
        }
        return size_t(twice / 2);
    };
    sc.e_ab = pair_count(a, b);
    sc.e_bc = pair_count(b, c);
    sc.e_ca = pair_count(c, a);

    auto check = [&](size_t size, size_t e1, size_t e2, size_t s, size_t s_prime, const char *name) {
        if (size != sc.g + sc.g_prime + e1 + e2 + s + s_prime) {
            throw ValidationError(std::string("qubit accounting fails for party ") + name + ": " + sc.to_json());
        }
    };
    check(a.size(), sc.e_ab, sc.e_ca, sc.s_a, sc.s_a_prime, "A");
    check(b.size(), sc.e_ab, sc.e_bc, sc.s_b, sc.s_b_prime, "B");
    check(c.size(), sc.e_bc, sc.e_ca, sc.s_c, sc.s_c_prime, "C");
    return sc;
}

BoundReport check_mie_mi_bound(const Tableau &t, const Region &a, const Region &b) {
    BoundReport report;
    report.mi_bits = mutual_information_bits(t, a, b);
    report.mie_bits = mie_bits(t, a, b, Basis::Z);
    SignReport sign = is_sign_free(t);
    report.sign_free = sign.sign_free;
    report.css_structure = sign.css_structure;
    report.holds = report.mie_bits <= report.mi_bits;
    if (!report.holds && report.css_structure) {
        throw ValidationError("MIE " + std::to_string(report.mie_bits) + " exceeds MI " +
                              std::to_string(report.mi_bits) + " on a CSS state");
    }
    return report;
}

}  // namespace mielab
