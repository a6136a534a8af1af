#pragma once

#include <cstdint>
#include <random>

#include "f2forms/bitmatrix.hpp"
#include "f2forms/bitvec.hpp"
#include "f2forms/subspace.hpp"

namespace f2forms {

/// Seeded generator for reproducible instances. Only raw engine output is
/// used (no std distributions), so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  bool bit() { return (engine_() >> 63) != 0; }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  BitVec vec(std::size_t dim);
  BitVec nonzero_vec(std::size_t dim);
  BitMatrix matrix(std::size_t rows, std::size_t cols);
  /// Uniform random matrix conditioned on rank >= min_rank (rejection sampling).
  BitMatrix matrix_with_min_rank(std::size_t n, std::size_t min_rank);
  /// Random subspace of F_2^n with codimension exactly `codim`.
  Subspace subspace_of_codim(std::size_t n, std::size_t codim);

 private:
  std::mt19937_64 engine_;
};

}  // namespace f2forms
