#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "f2forms/bitmatrix.hpp"
#include "f2forms/bitvec.hpp"
#include "f2forms/permutation.hpp"
#include "f2forms/subspace.hpp"

namespace f2forms {

/// A k-linear form on (F_2^n)^k held as its coefficient tensor
/// c[i_1, ..., i_k] = alpha(e_{i_1}, ..., e_{i_k}).
///
/// Layout: the tensor is a row-major array of n^{k-1} fibers, one per prefix
/// (i_1, ..., i_{k-1}); each fiber packs the last axis into words. Arity 0 is
/// a constant, dimension 0 is the zero form of its arity.
class MultilinearForm {
 public:
  MultilinearForm() : MultilinearForm(0, 0) {}
  MultilinearForm(std::size_t arity, std::size_t dim);

  static MultilinearForm constant(bool value);
  /// Sets the coefficient of each listed (0-based) index tuple to one.
  static MultilinearForm from_monomials(std::size_t arity, std::size_t dim,
                                        std::span<const std::vector<std::size_t>> monomials);
  /// Arity-2 form x^T M y.
  static MultilinearForm from_matrix(const BitMatrix& m);
  /// Arity-1 form x -> f . x.
  static MultilinearForm from_functional(const BitVec& f);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }

  bool coeff(std::span<const std::size_t> index) const;
  void set_coeff(std::span<const std::size_t> index, bool value = true);
  void flip_coeff(std::span<const std::size_t> index);

  bool is_zero() const;
  /// Number of nonzero coefficients.
  std::size_t weight() const;
  /// Nonzero index tuples (0-based) in lexicographic order.
  std::vector<std::vector<std::size_t>> monomials() const;

  /// Arity-2 only.
  BitMatrix to_matrix() const;
  /// Arity-1 only.
  BitVec to_functional() const;

  std::size_t fiber_count() const { return fiber_count_; }
  std::size_t fiber_words() const { return fiber_words_; }
  std::span<const Word> fiber(std::size_t f) const {
    return {words_.data() + f * fiber_words_, fiber_words_};
  }
  std::span<Word> fiber(std::size_t f) { return {words_.data() + f * fiber_words_, fiber_words_}; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  /// Coefficients as an integer, bit t = coefficient at flat row-major index t.
  /// Requires dim^arity <= 64.
  std::uint64_t packed_key() const;
  static MultilinearForm from_packed_key(std::size_t arity, std::size_t dim, std::uint64_t key);

  MultilinearForm& operator+=(const MultilinearForm& other);
  friend MultilinearForm operator+(MultilinearForm a, const MultilinearForm& b) { return a += b; }
  friend bool operator==(const MultilinearForm& a, const MultilinearForm& b) = default;

 private:
  std::size_t flat_bit(std::span<const std::size_t> index) const;
  void require_same_shape(const MultilinearForm& other) const;

  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  std::size_t fiber_words_ = 0;
  std::size_t fiber_count_ = 0;
  std::vector<Word> words_;
};

/// n^k with 0^0 = 1; throws ShapeError on overflow.
std::size_t checked_pow(std::size_t base, std::size_t exp);

bool evaluate(const MultilinearForm& form, std::span<const BitVec> args);

/// (form o pi)(x_1, ..., x_k) = form(x_{pi^-1(1)}, ..., x_{pi^-1(k)}).
/// This is a right action: permute(permute(a, p), s) == permute(a, p * s).
MultilinearForm permute(const MultilinearForm& form, const Permutation& pi);

MultilinearForm add(const MultilinearForm& a, const MultilinearForm& b);

bool is_symmetric(const MultilinearForm& form);

/// Symmetric, and alpha(x, x, y, a_4, ...) == alpha(x, y, y, a_4, ...) as
/// polynomial maps. Arity >= 3.
bool is_strongly_symmetric(const MultilinearForm& form);

/// The form on s^k written in the coordinates of s's basis.
MultilinearForm restrict(const MultilinearForm& form, const Subspace& s);

/// Enumerates every symmetric k-linear form on F_2^n: one free bit per
/// multiset of k axis indices. Index `mask` selects the multisets whose bit is set.
class SymmetricFormEnumerator {
 public:
  static constexpr std::size_t kMaxMultisets = 25;

  SymmetricFormEnumerator(std::size_t dim, std::size_t arity);

  std::size_t multiset_count() const { return basis_.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << basis_.size(); }
  MultilinearForm at(std::uint64_t mask) const;
  /// Sorted (0-based) index multisets, in enumeration bit order.
  const std::vector<std::vector<std::size_t>>& multisets() const { return multisets_; }

 private:
  std::size_t dim_;
  std::size_t arity_;
  std::vector<std::vector<std::size_t>> multisets_;
  std::vector<MultilinearForm> basis_;
};

}  // namespace f2forms
