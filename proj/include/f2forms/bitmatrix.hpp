#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "f2forms/bitvec.hpp"

namespace f2forms {

/// Dense matrix over F_2 stored as packed rows. As a bilinear form the
/// matrix M represents (x, y) -> x^T M y.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::size_t cols, std::vector<BitVec> rows);
  /// Outer product u v^T.
  static BitMatrix outer(const BitVec& u, const BitVec& v);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVec>& row_data() const { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  bool is_zero() const;
  BitMatrix transpose() const;
  BitVec column(std::size_t c) const;

  /// M v.
  BitVec apply(const BitVec& v) const;
  /// v^T M.
  BitVec apply_left(const BitVec& v) const;
  /// x^T M y.
  bool bilinear(const BitVec& x, const BitVec& y) const;

  BitMatrix& operator^=(const BitMatrix& other);
  friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Reduced row echelon form of the row space: `rows` are independent,
/// `pivots[i]` is the leading column of rows[i] and no other row has a one
/// in that column. Pivots are strictly increasing.
struct Echelon {
  std::vector<BitVec> rows;
  std::vector<std::size_t> pivots;
};

Echelon row_echelon(const BitMatrix& m);
Echelon row_echelon(std::size_t cols, std::vector<BitVec> rows);

std::size_t rank(const BitMatrix& m);

/// Some x with A x = b (free variables set to zero), or nothing if the
/// system is inconsistent.
std::optional<BitVec> solve_linear(const BitMatrix& a, const BitVec& b);

/// M = sum_t left[t] right[t]^T with exactly rank(M) terms: the bilinear form
/// x^T M y equals sum_t (left[t].x)(right[t].y).
struct RankFactorization {
  std::vector<BitVec> left;
  std::vector<BitVec> right;
};

RankFactorization rank_factorization(const BitMatrix& m);

}  // namespace f2forms
