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

#include "mielab/stabilizer_engine/nested_observables.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "mielab/pauli_gf2/binary_matrix.h"

namespace mielab {
namespace {

/// Forward elimination over a copy of the stabilizer rows, stored as
/// [x words | z words], with pivots chosen in caller-specified column order.
/// Rows [next_, n) always span the subgroup vanishing on every column
/// eliminated so far.
class RowEliminator {
   public:
    explicit RowEliminator(const Tableau &t) : n_(t.num_qubits()), w_(t.num_words()), data_(n_ * 2 * w_) {
        for (size_t i = 0; i < n_; i++) {
            std::copy(t.stab_x(i).begin(), t.stab_x(i).end(), data_.begin() + i * 2 * w_);
            std::copy(t.stab_z(i).begin(), t.stab_z(i).end(), data_.begin() + i * 2 * w_ + w_);
        }
    }

    /// plane 0 = x, 1 = z. Returns true if a pivot was found.
    bool eliminate(int plane, size_t q) {
        size_t word = plane * w_ + q / kWordBits;
        uint64_t mask = uint64_t{1} << (q % kWordBits);
        size_t stride = 2 * w_;
        size_t found = next_;
        while (found < n_ && !(data_[found * stride + word] & mask)) {
            found++;
        }
        if (found == n_) {
            return false;
        }
        if (found != next_) {
            std::swap_ranges(data_.begin() + found * stride, data_.begin() + (found + 1) * stride,
                             data_.begin() + next_ * stride);
        }
        const uint64_t *src = data_.data() + next_ * stride;
        for (size_t r = next_ + 1; r < n_; r++) {
            uint64_t *dst = data_.data() + r * stride;
            if (dst[word] & mask) {
                for (size_t k = 0; k < stride; k++) {
                    dst[k] ^= src[k];
                }
            }
        }
        next_++;
        return true;
    }

    /// Rank of rows [next_, n) restricted to both planes on `sites`.
    size_t remaining_rank_on(const Region &sites) const {
        BinaryMatrix m(n_ - next_, 2 * sites.size());
        for (size_t r = next_; r < n_; r++) {
            const uint64_t *row = data_.data() + r * 2 * w_;
            for (size_t k = 0; k < sites.size(); k++) {
                size_t q = sites[k];
                if ((row[q / kWordBits] >> (q % kWordBits)) & 1) {
                    m.set(r - next_, 2 * k, true);
                }
                if ((row[w_ + q / kWordBits] >> (q % kWordBits)) & 1) {
                    m.set(r - next_, 2 * k + 1, true);
                }
            }
        }
        return gf2_rank(std::move(m));
    }

    size_t pivots() const {
        return next_;
    }

   private:
    size_t n_;
    size_t w_;
    std::vector<uint64_t> data_;
    size_t next_ = 0;
};

void require_chain(const std::vector<Region> &chain) {
    for (size_t k = 1; k < chain.size(); k++) {
        if (!std::includes(chain[k].begin(), chain[k].end(), chain[k - 1].begin(), chain[k - 1].end())) {
            throw std::invalid_argument("region chain is not nested");
        }
    }
}

Region difference(const Region &big, const Region &small) {
    Region out;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<size_t> nested_entropy_bits(const Tableau &t, const std::vector<Region> &chain) {
    require_chain(chain);
    RowEliminator elim(t);
    std::vector<size_t> out;
    Region done;
    for (const Region &r : chain) {
        for (size_t q : difference(r, done)) {
            if (q >= t.num_qubits()) {
                throw std::out_of_range("region site out of range");
            }
            elim.eliminate(0, q);
            elim.eliminate(1, q);
        }
        done = r;
        out.push_back(elim.pivots() - r.size());
    }
    return out;
}

std::vector<size_t> nested_mie_bits(const Tableau &t, const std::vector<Region> &a_chain,
                                    const std::vector<Region> &b_chain, Basis basis) {
    if (a_chain.size() != b_chain.size()) {
        throw std::invalid_argument("A and B chains differ in length");
    }
    require_chain(a_chain);
    require_chain(b_chain);
    size_t n = t.num_qubits();
    size_t k_max = a_chain.size();
    std::vector<size_t> out(k_max);
    if (k_max == 0) {
        return out;
    }
    std::vector<Region> c_chain(k_max);
    for (size_t k = 0; k < k_max; k++) {
        require_disjoint(a_chain[k], b_chain[k]);
        c_chain[k] = complement(a_chain[k], b_chain[k], n);
    }
    int plane = basis == Basis::Z ? 0 : 1;
    RowEliminator elim(t);
    Region done;
    for (size_t k = k_max; k-- > 0;) {
        for (size_t q : difference(c_chain[k], done)) {
            elim.eliminate(plane, q);
        }
        done = c_chain[k];
        out[k] = elim.remaining_rank_on(a_chain[k]) - a_chain[k].size();
    }
    return out;
}

std::vector<size_t> nested_mutual_information_bits(const Tableau &t, const std::vector<Region> &a_chain,
                                                   const std::vector<Region> &b_chain) {
    if (a_chain.size() != b_chain.size()) {
        throw std::invalid_argument("A and B chains differ in length");
    }
    std::vector<Region> ab_chain;
    for (size_t k = 0; k < a_chain.size(); k++) {
        require_disjoint(a_chain[k], b_chain[k]);
        ab_chain.push_back(region_union(a_chain[k], b_chain[k]));
    }
    auto sa = nested_entropy_bits(t, a_chain);
    auto sb = nested_entropy_bits(t, b_chain);
    auto sab = nested_entropy_bits(t, ab_chain);
    std::vector<size_t> out;
    for (size_t k = 0; k < a_chain.size(); k++) {
        out.push_back(sa[k] + sb[k] - sab[k]);
    }
    return out;
}

}  // namespace mielab
