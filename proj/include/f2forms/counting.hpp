#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "f2forms/bilinear_form.hpp"
#include "f2forms/prank.hpp"
#include "f2forms/subspace.hpp"

namespace f2forms {

/// C = shift + subspace. d in the counting bounds is subspace.codim().
struct Coset {
  Subspace subspace;
  BitVec shift;

  std::size_t codim() const { return subspace.codim(); }
  std::uint64_t size() const { return std::uint64_t{1} << subspace.dim(); }
};

struct CountingReport {
  std::size_t r = 0;
  std::size_t d = 0;
  /// value_counts[v] counts (x, y) in C x C with alpha_i(x, y) = bit i of v.
  std::vector<std::uint64_t> value_counts;
  std::uint64_t coset_size = 0;
  std::uint64_t min_count = 0;
  /// 1 - min_count 2^r / |C|^2: the least eps for which the near-uniform
  /// bound holds.
  double epsilon_achieved = 1.0;
  bool surjective = false;

  double epsilon = 0.0;
  /// Every count >= (1 - epsilon) 2^{-r} |C|^2.
  bool conclusion_holds = false;
  /// Least rank of a nonzero combination of the alphas on the whole space.
  std::size_t min_rank = 0;
  /// min_rank > 4r + 8d + 4 log2(1/epsilon).
  bool hypothesis_holds = false;
};

/// Exhaustive value census of (alpha_1, ..., alpha_r) on C x C. Needs
/// |C|^2 <= options.max_enum.
CountingReport counting_check(std::span<const BilinearForm> alphas, const Coset& coset, double epsilon,
                              const EnumOptions& options = {});

/// The hypothesis threshold 4r + 8d + 4 log2(1/epsilon).
double counting_threshold(std::size_t r, std::size_t d, double epsilon);

}  // namespace f2forms
