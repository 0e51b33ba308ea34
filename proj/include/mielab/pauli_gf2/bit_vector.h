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

#ifndef MIELAB_PAULI_GF2_BIT_VECTOR_H
#define MIELAB_PAULI_GF2_BIT_VECTOR_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mielab {

inline constexpr size_t kWordBits = 64;

constexpr size_t words_for_bits(size_t num_bits) {
    return (num_bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length packed bit vector. Bit i lives in word i / 64 at position
/// i % 64. Padding bits past size() are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for_bits(num_bits), 0) {
    }

    /// Parses a string of '0' and '1' characters, first character is bit 0.
    static BitVector from_string(std::string_view bits);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }

    bool operator[](size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    void set(size_t i, bool value) {
        uint64_t mask = uint64_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(size_t i) {
        words_[i / kWordBits] ^= uint64_t{1} << (i % kWordBits);
    }

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    size_t popcount() const;
    bool none() const;

    /// Throws DimensionError on length mismatch.
    BitVector &operator^=(const BitVector &other);
    /// Parity of the AND with `other`. Throws DimensionError on length mismatch.
    bool dot(const BitVector &other) const;

    bool operator==(const BitVector &other) const = default;

    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace mielab

#endif
