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

#include "mielab/pauli_gf2/binary_matrix.h"

#include <algorithm>

#include "mielab/errors.h"

namespace mielab {

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BinaryMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw DimensionError("ragged binary matrix rows");
        }
        for (size_t c = 0; c < cols; c++) {
            if (rows[r][c] == '1') {
                m.set(r, c, true);
            } else if (rows[r][c] != '0') {
                throw std::invalid_argument("binary matrix rows may only contain '0' and '1'");
            }
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitVector BinaryMatrix::row_vector(size_t r) const {
    BitVector v(cols_);
    std::copy_n(bits_.begin() + r * row_words_, row_words_, v.words().begin());
    return v;
}

void BinaryMatrix::xor_row_into(size_t src, size_t dst) {
    uint64_t *d = bits_.data() + dst * row_words_;
    const uint64_t *s = bits_.data() + src * row_words_;
    for (size_t k = 0; k < row_words_; k++) {
        d[k] ^= s[k];
    }
}

void BinaryMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(bits_.begin() + a * row_words_, bits_.begin() + (a + 1) * row_words_,
                     bits_.begin() + b * row_words_);
}

void BinaryMatrix::append_row(const BitVector &v) {
    if (v.size() != cols_) {
        throw DimensionError("appended row has wrong length");
    }
    bits_.insert(bits_.end(), v.words().begin(), v.words().end());
    rows_++;
}

bool BinaryMatrix::row_is_zero(size_t r) const {
    for (uint64_t w : row(r)) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> BinaryMatrix::row_reduce() {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 0; c < cols_ && next < rows_; c++) {
        size_t word = c / kWordBits;
        uint64_t mask = uint64_t{1} << (c % kWordBits);
        size_t found = next;
        while (found < rows_ && !(bits_[found * row_words_ + word] & mask)) {
            found++;
        }
        if (found == rows_) {
            continue;
        }
        swap_rows(found, next);
        for (size_t r = next + 1; r < rows_; r++) {
            if (bits_[r * row_words_ + word] & mask) {
                xor_row_into(next, r);
            }
        }
        pivots.push_back(c);
        next++;
    }
    return pivots;
}

size_t gf2_rank(BinaryMatrix m) {
    return m.row_reduce().size();
}

bool gf2_in_span(const BinaryMatrix &rows, const BitVector &v) {
    if (v.size() != rows.cols()) {
        throw DimensionError("vector length does not match matrix columns");
    }
    BinaryMatrix work = rows;
    std::vector<size_t> pivots = work.row_reduce();
    BitVector rest = v;
    for (size_t i = 0; i < pivots.size(); i++) {
        if (rest[pivots[i]]) {
            auto src = work.row(i);
            auto dst = rest.words();
            for (size_t k = 0; k < dst.size(); k++) {
                dst[k] ^= src[k];
            }
        }
    }
    return rest.none();
}

}  // namespace mielab
