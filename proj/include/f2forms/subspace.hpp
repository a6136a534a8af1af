#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "f2forms/bitmatrix.hpp"
#include "f2forms/bitvec.hpp"

namespace f2forms {

/// Subspace of F_2^n stored by a basis in reduced row echelon form. The
/// canonical basis makes equality structural, and the coordinates of a member
/// are simply its entries at the pivot columns.
class Subspace {
 public:
  Subspace() = default;

  static Subspace full(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  /// Span of arbitrary (possibly dependent) generators.
  static Subspace span(std::size_t ambient_dim, std::span<const BitVec> generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient_dim_ - basis_.rows(); }

  const BitMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const BitVec& v) const;
  /// Coordinates of a member with respect to basis(); throws if not a member.
  BitVec coordinates(const BitVec& member) const;
  /// sum_j coords[j] basis_j.
  BitVec embed(const BitVec& coords) const;
  /// The ambient functional f restricted to this subspace, in coordinates:
  /// component j is f . basis_j.
  BitVec restrict_functional(const BitVec& ambient_functional) const;
  /// Some ambient functional whose restriction is the given coordinate functional.
  BitVec extend_functional(const BitVec& coord_functional) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {M v = 0}: the right kernel, inside F_2^{cols}.
Subspace kernel_basis(const BitMatrix& m);

/// {x in ambient : f . x = 0 for every f in functionals}.
Subspace subspace_from_constraints(std::span<const BitVec> functionals, const Subspace& ambient);

/// B M B^T where B holds the basis of `s` as rows: the bilinear form M
/// restricted to s x s, written in s-coordinates.
BitMatrix restrict_bilinear(const BitMatrix& m, const Subspace& s);

/// B M: the form restricted to s x F_2^n (left variable only).
BitMatrix restrict_bilinear_left(const BitMatrix& m, const Subspace& s);

}  // namespace f2forms
