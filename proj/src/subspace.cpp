#include "f2forms/subspace.hpp"

#include "f2forms/errors.hpp"

namespace f2forms {

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = BitMatrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = BitMatrix(0, ambient_dim);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const BitVec> generators) {
  for (const auto& g : generators) {
    if (g.dim() != ambient_dim) throw ShapeError("Subspace::span: generator dimension mismatch");
  }
  Echelon e = row_echelon(ambient_dim, std::vector<BitVec>(generators.begin(), generators.end()));
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = BitMatrix::from_rows(ambient_dim, std::move(e.rows));
  s.pivots_ = std::move(e.pivots);
  return s;
}

bool Subspace::contains(const BitVec& v) const {
  if (v.dim() != ambient_dim_) throw ShapeError("Subspace::contains: dimension mismatch");
  BitVec r = v;
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    if (r.get(pivots_[j])) r ^= basis_.row(j);
  }
  return r.is_zero();
}

BitVec Subspace::coordinates(const BitVec& member) const {
  if (!contains(member)) throw ShapeError("Subspace::coordinates: vector is not a member");
  BitVec c(dim());
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    if (member.get(pivots_[j])) c.set(j);
  }
  return c;
}

BitVec Subspace::embed(const BitVec& coords) const {
  if (coords.dim() != dim()) throw ShapeError("Subspace::embed: coordinate dimension mismatch");
  return basis_.apply_left(coords);
}

BitVec Subspace::restrict_functional(const BitVec& ambient_functional) const {
  return basis_.apply(ambient_functional);
}

BitVec Subspace::extend_functional(const BitVec& coord_functional) const {
  if (coord_functional.dim() != dim()) {
    throw ShapeError("Subspace::extend_functional: dimension mismatch");
  }
  // basis_j has a one at pivot_j and zeros at every other pivot, so putting
  // the coordinate values on the pivot columns reproduces them exactly.
  BitVec f(ambient_dim_);
  for (std::size_t j : coord_functional.support()) f.set(pivots_[j]);
  return f;
}

Subspace kernel_basis(const BitMatrix& m) {
  const Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<BitVec> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVec v(m.cols());
    v.set(f);
    for (std::size_t t = 0; t < e.rows.size(); ++t) {
      if (e.rows[t].get(f)) v.set(e.pivots[t]);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

Subspace subspace_from_constraints(std::span<const BitVec> functionals, const Subspace& ambient) {
  if (functionals.empty()) return ambient;
  // x = c^T B; f . x = c . (B f), so the constraint matrix in coordinates has
  // rows B f_i and its kernel gives the admissible coordinate vectors.
  std::vector<BitVec> rows;
  rows.reserve(functionals.size());
  for (const auto& f : functionals) {
    if (f.dim() != ambient.ambient_dim()) {
      throw ShapeError("subspace_from_constraints: functional dimension mismatch");
    }
    rows.push_back(ambient.restrict_functional(f));
  }
  const Subspace coords = kernel_basis(BitMatrix::from_rows(ambient.dim(), std::move(rows)));
  std::vector<BitVec> gens;
  gens.reserve(coords.dim());
  for (const auto& c : coords.basis().row_data()) gens.push_back(ambient.embed(c));
  return Subspace::span(ambient.ambient_dim(), gens);
}

BitMatrix restrict_bilinear_left(const BitMatrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) throw ShapeError("restrict_bilinear_left: dimension mismatch");
  return s.basis() * m;
}

BitMatrix restrict_bilinear(const BitMatrix& m, const Subspace& s) {
  if (m.rows() != m.cols() || m.rows() != s.ambient_dim()) {
    throw ShapeError("restrict_bilinear: matrix must be square with side equal to ambient dim");
  }
  const BitMatrix left = s.basis() * m;
  BitMatrix out(s.dim(), s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if (left.row(a).dot(s.basis().row(b))) out.set(a, b);
    }
  }
  return out;
}

}  // namespace f2forms
