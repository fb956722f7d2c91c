#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace dicore::bits {

using Word = std::uint64_t;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }

inline void reset(std::span<Word> row, std::size_t i) { row[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline std::size_t count(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool any(std::span<const Word> row) {
  for (Word w : row)
    if (w != 0) return true;
  return false;
}

// Calls fn(index) for every set bit in ascending order.
template <class Fn>
void for_each(std::span<const Word> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word word = row[w];
    while (word != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(word));
      fn(w * kWordBits + bit);
      word &= word - 1;
    }
  }
}

}  // namespace dicore::bits
