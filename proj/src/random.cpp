#include "f2forms/random.hpp"

#include <vector>

#include "f2forms/errors.hpp"

namespace f2forms {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return v % bound;
}

BitVec Rng::vec(std::size_t dim) {
  BitVec v(dim);
  for (std::size_t i = 0; i < dim; i += 64) {
    const std::uint64_t bits = engine_();
    for (std::size_t b = 0; b < 64 && i + b < dim; ++b) {
      if ((bits >> b) & 1U) v.set(i + b);
    }
  }
  return v;
}

BitVec Rng::nonzero_vec(std::size_t dim) {
  if (dim == 0) throw ShapeError("Rng::nonzero_vec: dimension 0 has no nonzero vector");
  BitVec v = vec(dim);
  while (v.is_zero()) v = vec(dim);
  return v;
}

BitMatrix Rng::matrix(std::size_t rows, std::size_t cols) {
  std::vector<BitVec> r;
  r.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) r.push_back(vec(cols));
  return BitMatrix::from_rows(cols, std::move(r));
}

BitMatrix Rng::matrix_with_min_rank(std::size_t n, std::size_t min_rank) {
  if (min_rank > n) throw PreconditionViolated("Rng::matrix_with_min_rank: min_rank exceeds n");
  BitMatrix m = matrix(n, n);
  while (rank(m) < min_rank) m = matrix(n, n);
  return m;
}

Subspace Rng::subspace_of_codim(std::size_t n, std::size_t codim) {
  if (codim > n) throw ShapeError("Rng::subspace_of_codim: codim exceeds n");
  std::vector<BitVec> constraints;
  while (true) {
    constraints.clear();
    for (std::size_t i = 0; i < codim; ++i) constraints.push_back(vec(n));
    Subspace s = subspace_from_constraints(constraints, Subspace::full(n));
    if (s.codim() == codim) return s;
  }
}

}  // namespace f2forms
