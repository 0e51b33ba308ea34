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

#ifndef MIELAB_PAULI_GF2_BINARY_MATRIX_H
#define MIELAB_PAULI_GF2_BINARY_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mielab/pauli_gf2/bit_vector.h"

namespace mielab {

/// Dense GF(2) matrix with packed row-major storage.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), row_words_(words_for_bits(cols)), bits_(rows * row_words_, 0) {
    }

    /// Each string is one row of '0'/'1' characters; all rows must have equal length.
    static BinaryMatrix from_strings(const std::vector<std::string> &rows);
    static BinaryMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t row_words() const {
        return row_words_;
    }

    bool get(size_t r, size_t c) const {
        return (bits_[r * row_words_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }
    void set(size_t r, size_t c, bool value) {
        uint64_t &w = bits_[r * row_words_ + c / kWordBits];
        uint64_t mask = uint64_t{1} << (c % kWordBits);
        w = value ? (w | mask) : (w & ~mask);
    }

    std::span<uint64_t> row(size_t r) {
        return {bits_.data() + r * row_words_, row_words_};
    }
    std::span<const uint64_t> row(size_t r) const {
        return {bits_.data() + r * row_words_, row_words_};
    }
    BitVector row_vector(size_t r) const;

    void xor_row_into(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);
    void append_row(const BitVector &v);
    bool row_is_zero(size_t r) const;

    /// In-place forward elimination to row echelon form. Returns the pivot
    /// column of each of the first rank() rows, which end up on top.
    std::vector<size_t> row_reduce();

    bool operator==(const BinaryMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t row_words_ = 0;
    std::vector<uint64_t> bits_;
};

/// Rank of the row space. Takes its argument by value: the elimination runs
/// on a working copy and the caller's matrix is untouched.
size_t gf2_rank(BinaryMatrix m);

/// True iff `v` is a GF(2) combination of the rows. Throws DimensionError if
/// v.size() != rows.cols().
bool gf2_in_span(const BinaryMatrix &rows, const BitVector &v);

}  // namespace mielab

#endif
