#include "f2forms/bitvec.hpp"

#include <algorithm>
#include <functional>

#include "f2forms/errors.hpp"

namespace f2forms {

BitVec BitVec::unit(std::size_t dim, std::size_t i) {
  BitVec v(dim);
  v.set(i);
  return v;
}

BitVec BitVec::from_indices(std::size_t dim, std::span<const std::size_t> indices) {
  BitVec v(dim);
  for (std::size_t i : indices) v.set(i);
  return v;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw FormatError("BitVec::from_string: expected '0' or '1'");
    }
  }
  return v;
}

BitVec BitVec::from_uint(std::size_t dim, std::uint64_t value) {
  if (dim > 64) throw ShapeError("BitVec::from_uint: dim exceeds 64");
  BitVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if ((value >> i) & 1U) v.set(i);
  }
  return v;
}

void BitVec::set(std::size_t i, bool value) {
  if (i >= dim_) throw ShapeError("BitVec::set: index out of range");
  const Word bit = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

bool BitVec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVec::popcount() const {
  std::size_t count = 0;
  for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool BitVec::dot(const BitVec& other) const {
  require_same_dim(other);
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVec::lowest_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return dim_;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (Word w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::uint64_t BitVec::to_uint() const {
  if (dim_ > 64) throw ShapeError("BitVec::to_uint: dim exceeds 64");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    value |= static_cast<std::uint64_t>(words_[i]) << (i * kWordBits);
  }
  return value;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_same_dim(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  require_same_dim(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

// Lexicographic on dimension, then on bit positions from index 0 upward.
std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const Word diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      const Word low = diff & (~diff + 1);
      return (a.words_[i] & low) != 0 ? std::strong_ordering::greater
                                      : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::string BitVec::to_string() const {
  std::string s(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t BitVec::hash() const {
  std::size_t h = std::hash<std::size_t>{}(dim_);
  for (Word w : words_) h = h * 0x9e3779b97f4a7c15ULL + std::hash<Word>{}(w);
  return h;
}

void BitVec::require_same_dim(const BitVec& other) const {
  if (dim_ != other.dim_) throw ShapeError("BitVec: dimension mismatch");
}

}  // namespace f2forms
