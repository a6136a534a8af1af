#pragma once

#include <cstddef>

#include "f2forms/bitmatrix.hpp"
#include "f2forms/bitvec.hpp"
#include "f2forms/multilinear_form.hpp"
#include "f2forms/subspace.hpp"

namespace f2forms {

/// beta(x, y) = x^T M y on F_2^n x F_2^n.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(std::size_t dim) : matrix_(dim, dim) {}
  explicit BilinearForm(BitMatrix matrix);

  static BilinearForm from_form(const MultilinearForm& form);

  std::size_t dim() const { return matrix_.rows(); }
  const BitMatrix& matrix() const { return matrix_; }

  bool operator()(const BitVec& x, const BitVec& y) const { return matrix_.bilinear(x, y); }
  std::size_t rank() const { return f2forms::rank(matrix_); }
  bool is_zero() const { return matrix_.is_zero(); }

  /// y -> beta(x, y) as a functional (x^T M).
  BitVec left_functional(const BitVec& x) const { return matrix_.apply_left(x); }
  /// x -> beta(x, y) as a functional (M y).
  BitVec right_functional(const BitVec& y) const { return matrix_.apply(y); }

  BilinearForm restricted(const Subspace& s) const {
    return BilinearForm(restrict_bilinear(matrix_, s));
  }
  MultilinearForm to_form() const { return MultilinearForm::from_matrix(matrix_); }

  BilinearForm& operator+=(const BilinearForm& other) {
    matrix_ ^= other.matrix_;
    return *this;
  }
  friend BilinearForm operator+(BilinearForm a, const BilinearForm& b) { return a += b; }
  friend bool operator==(const BilinearForm& a, const BilinearForm& b) = default;

 private:
  BitMatrix matrix_;
};

}  // namespace f2forms
