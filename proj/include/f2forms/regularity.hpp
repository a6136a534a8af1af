#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "f2forms/bilinear_form.hpp"
#include "f2forms/subspace.hpp"

namespace f2forms {

/// {x : beta(x, y) = 0 for all y}, the left kernel; its codimension equals
/// rank(beta).
Subspace low_rank_vanishing_subspace(const BilinearForm& beta);

/// One iteration of the regularizer that found a low-rank combination.
struct RegularityStep {
  std::size_t dropped = 0;        // input index removed from the active list
  BitVec combination;             // over (inputs..., rho), dim r + 1
  std::size_t combination_rank = 0;
  std::size_t codim_after = 0;
};

struct RegularityResult {
  /// U', a subspace of the input space F_2^n.
  Subspace subspace;
  /// Input indices of the forms kept as alpha_1..alpha_s, increasing.
  std::vector<std::size_t> kept;
  /// beta_{kept[t]} restricted to U' x U', in U' coordinates.
  std::vector<BilinearForm> independent_forms;
  /// expressions[i] has dim s + 1: beta_i on U' x U' equals
  /// sum_t expressions[i][t] alpha_t + expressions[i][s] rho.
  std::vector<BitVec> expressions;
  std::size_t min_rank_target = 0;
  std::size_t input_count = 0;
  /// Whether rank(rho) >= (4r + 1) m held for the input.
  bool rank_hypothesis_met = false;
  std::vector<RegularityStep> steps;
};

struct RegularizeOptions {
  /// When false the regularizer runs even if rank(rho) < (4r + 1) m; the
  /// result records the unmet hypothesis and the audit still applies.
  bool require_rank_hypothesis = true;
};

/// Finds U' of codimension <= 2rm and a subfamily alpha_1..alpha_s of the
/// inputs such that every nonzero combination of the alphas and rho has rank
/// >= m on U' x U', while every input is such a combination on U' x U'.
///
/// Each round scans all 2^{s+1} - 1 combinations in increasing mask order
/// (bit t for alpha_t, bit s for rho). A combination of rank < m drops its
/// highest-indexed alpha and cuts U' by the 2 * rank linear forms of the
/// combination's rank factorization.
RegularityResult bilinear_regularize(const BilinearForm& rho, std::span<const BilinearForm> betas,
                                     std::size_t m, const RegularizeOptions& options = {});

struct RegularityAudit {
  bool count_ok = false;        // s <= r
  bool codim_ok = false;        // codim(U') <= 2rm
  bool combinations_ok = false; // every nonzero combination has rank >= m
  bool expressions_ok = false;  // inputs reproduced exactly on U' x U'
  std::size_t min_combination_rank = 0;

  bool ok() const { return count_ok && codim_ok && combinations_ok && expressions_ok; }
};

RegularityAudit audit_regularity(const RegularityResult& result, const BilinearForm& rho,
                                 std::span<const BilinearForm> betas);

/// min over nonzero lambda of rank(sum lambda_i forms_i).
std::size_t min_combination_rank(std::span<const BilinearForm> forms);

}  // namespace f2forms
