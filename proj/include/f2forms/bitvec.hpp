#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#ifndef F2FORMS_WORD_BITS
#define F2FORMS_WORD_BITS 64
#endif

namespace f2forms {

#if F2FORMS_WORD_BITS == 64
using Word = std::uint64_t;
#elif F2FORMS_WORD_BITS == 32
using Word = std::uint32_t;
#else
#error "F2FORMS_WORD_BITS must be 32 or 64"
#endif

inline constexpr std::size_t kWordBits = F2FORMS_WORD_BITS;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Mask selecting the valid bits of the last word of a `bits`-long array.
constexpr Word tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

/// Packed vector in F_2^n. Bits beyond dim() are always zero, so word-wise
/// comparison and hashing are exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t dim) : dim_(dim), words_(words_for(dim), 0) {}

  static BitVec unit(std::size_t dim, std::size_t i);
  static BitVec from_indices(std::size_t dim, std::span<const std::size_t> indices);
  /// Parses a string of '0'/'1' characters, position 0 first.
  static BitVec from_string(std::string_view bits);
  /// Low `dim` bits of `value` (dim <= 64).
  static BitVec from_uint(std::size_t dim, std::uint64_t value);

  std::size_t dim() const { return dim_; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool is_zero() const;
  std::size_t popcount() const;
  /// Inner product over F_2.
  bool dot(const BitVec& other) const;
  /// Index of the lowest set bit, or dim() if zero.
  std::size_t lowest_set() const;
  std::vector<std::size_t> support() const;
  /// Low 64 bits as an integer (dim <= 64).
  std::uint64_t to_uint() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void require_same_dim(const BitVec& other) const;

  std::size_t dim_ = 0;
  std::vector<Word> words_;
};

}  // namespace f2forms
