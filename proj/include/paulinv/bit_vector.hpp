// Copyright 2026 The paulinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace paulinv {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Mask of the valid bits in the last word of a `bits`-long packed vector.
constexpr word_t tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~word_t{0} : (word_t{1} << r) - 1;
}

/// Packed bit vector of fixed length. Bits past size() in the last word are
/// always zero, so word-wise comparisons and popcounts need no masking.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  static BitVector from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("BitVector: non-binary character in '" + bits + "'");
      }
    }
    return v;
  }

  static BitVector ones(std::size_t size) {
    BitVector v(size);
    for (auto& w : v.words_) w = ~word_t{0};
    if (!v.words_.empty()) v.words_.back() &= tail_mask(size);
    return v;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value = true) {
    const word_t m = word_t{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= m;
    } else {
      words_[i / kWordBits] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

  std::span<const word_t> words() const { return words_; }
  std::span<word_t> words() { return words_; }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (word_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (word_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  BitVector& operator^=(const BitVector& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  BitVector& operator&=(const BitVector& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitVector& operator|=(const BitVector& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  /// GF(2) inner product.
  bool dot(const BitVector& o) const {
    check_same(o);
    word_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
    return std::popcount(acc) & 1;
  }

  /// Index of the lowest set bit, or size() when none is set.
  std::size_t find_first() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return size_;
  }

  /// Concatenation [this | tail].
  BitVector concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) out.set(i);
    }
    for (std::size_t i = 0; i < tail.size_; ++i) {
      if (tail.get(i)) out.set(size_ + i);
    }
    return out;
  }

  BitVector slice(std::size_t begin, std::size_t count) const {
    BitVector out(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (get(begin + i)) out.set(i);
    }
    return out;
  }

  std::string str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (word_t w : words_) h ^= std::hash<word_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_same(const BitVector& o) const {
    if (o.size_ != size_) throw std::invalid_argument("BitVector: length mismatch");
  }

  std::size_t size_ = 0;
  std::vector<word_t> words_;
};

}  // namespace paulinv
