#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sidon/integer_set.hpp"

namespace sidon::detail {

// Fixed-length bitset over indices [0, bits) with a shifted-or primitive for sumsets.
class Bitset {
 public:
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t bits() const { return bits_; }

  // *this |= (src << shift), bits past the end are dropped.
  void or_shifted(const Bitset& src, std::size_t shift) {
    if (shift >= bits_) return;
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = shift & 63;
    const std::size_t n = words_.size();
    const std::size_t m = src.words_.size();
    for (std::size_t i = n; i-- > word_shift;) {
      const std::size_t j = i - word_shift;
      std::uint64_t w = j < m ? src.words_[j] << bit_shift : 0;
      if (bit_shift != 0 && j >= 1 && j - 1 < m) w |= src.words_[j - 1] >> (64 - bit_shift);
      words_[i] |= w;
    }
    clear_tail();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Set bits in [lo, hi].
  std::size_t count_range(std::size_t lo, std::size_t hi) const {
    std::size_t c = 0;
    for (std::size_t i = lo; i <= hi && i < bits_; ++i) c += test(i);
    return c;
  }

  std::vector<Int> indices() const {
    std::vector<Int> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        out.push_back(static_cast<Int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  void clear_tail() {
    if (bits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace sidon::detail
