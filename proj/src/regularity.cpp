#include "f2forms/regularity.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "f2forms/errors.hpp"

namespace f2forms {

Subspace low_rank_vanishing_subspace(const BilinearForm& beta) {
  // beta(x, .) = x^T M vanishes iff M^T x = 0.
  return kernel_basis(beta.matrix().transpose());
}

std::size_t min_combination_rank(std::span<const BilinearForm> forms) {
  if (forms.empty()) return std::numeric_limits<std::size_t>::max();
  if (forms.size() >= 32) throw BudgetExceeded("min_combination_rank: too many forms");
  const std::size_t n = forms.front().dim();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  BitMatrix combo(n, n);
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << forms.size()); ++g) {
    combo ^= forms[static_cast<std::size_t>(std::countr_zero(g))].matrix();
    best = std::min(best, rank(combo));
  }
  return best;
}

namespace {

BitMatrix combine(std::span<const BitMatrix> parts, std::uint64_t mask) {
  BitMatrix out(parts.front().rows(), parts.front().cols());
  for (std::size_t t = 0; t < parts.size(); ++t) {
    if ((mask >> t) & 1U) out ^= parts[t];
  }
  return out;
}

}  // namespace

RegularityResult bilinear_regularize(const BilinearForm& rho, std::span<const BilinearForm> betas,
                                     std::size_t m, const RegularizeOptions& options) {
  const std::size_t n = rho.dim();
  const std::size_t r = betas.size();
  for (const auto& b : betas) {
    if (b.dim() != n) throw ShapeError("bilinear_regularize: form dimension mismatch");
  }
  if (r >= 31) throw BudgetExceeded("bilinear_regularize: too many forms for exhaustive combinations");

  RegularityResult result;
  result.input_count = r;
  result.min_rank_target = m;
  result.rank_hypothesis_met = rho.rank() >= (4 * r + 1) * m;
  if (options.require_rank_hypothesis && !result.rank_hypothesis_met) {
    throw PreconditionViolated("bilinear_regularize: rank(rho) = " + std::to_string(rho.rank()) +
                               " < (4r + 1) m = " + std::to_string((4 * r + 1) * m));
  }

  Subspace u = Subspace::full(n);
  std::vector<std::size_t> active;
  std::vector<BitVec> expr;  // over (inputs..., rho)
  for (std::size_t i = 0; i < r; ++i) {
    active.push_back(i);
    expr.push_back(BitVec::unit(r + 1, i));
  }

  std::vector<BitMatrix> parts;
  while (true) {
    const std::size_t s = active.size();
    parts.clear();
    for (std::size_t idx : active) parts.push_back(restrict_bilinear(betas[idx].matrix(), u));
    parts.push_back(restrict_bilinear(rho.matrix(), u));

    std::uint64_t hit = 0;
    std::size_t hit_rank = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (s + 1)); ++mask) {
      const std::size_t rk = rank(combine(parts, mask));
      if (rk < m) {
        hit = mask;
        hit_rank = rk;
        break;
      }
    }
    if (hit == 0) break;

    const std::uint64_t lambda = hit & ((std::uint64_t{1} << s) - 1);
    if (lambda == 0) {
      throw PreconditionViolated("bilinear_regularize: rho restricted to U' has rank " +
                                 std::to_string(hit_rank) + " < m");
    }
    const auto top = static_cast<std::size_t>(std::bit_width(lambda) - 1);
    const std::size_t dropped = active[top];

    RegularityStep step;
    step.dropped = dropped;
    step.combination = BitVec(r + 1);
    for (std::size_t t = 0; t < s; ++t) {
      if ((lambda >> t) & 1U) step.combination.set(active[t]);
    }
    if ((hit >> s) & 1U) step.combination.set(r);
    step.combination_rank = hit_rank;

    // alpha_top = combo + (the rest of the combination); combo is a sum of
    // hit_rank products u_j(x) v_j(y) and vanishes once U' is cut by all u_j, v_j.
    const RankFactorization factors = rank_factorization(combine(parts, hit));
    std::vector<BitVec> cuts;
    for (std::size_t j = 0; j < factors.left.size(); ++j) {
      cuts.push_back(u.extend_functional(factors.left[j]));
      cuts.push_back(u.extend_functional(factors.right[j]));
    }
    u = subspace_from_constraints(cuts, u);
    step.codim_after = u.codim();

    BitVec relation = step.combination;
    relation.set(dropped, false);
    for (auto& e : expr) {
      if (e.get(dropped)) {
        e ^= relation;
        e.set(dropped, false);
      }
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(top));
    result.steps.push_back(std::move(step));
  }

  result.subspace = u;
  result.kept = active;
  for (std::size_t t = 0; t < active.size(); ++t) result.independent_forms.emplace_back(parts[t]);
  const std::size_t s = active.size();
  for (const auto& e : expr) {
    BitVec out(s + 1);
    for (std::size_t t = 0; t < s; ++t) {
      if (e.get(active[t])) out.set(t);
    }
    if (e.get(r)) out.set(s);
    result.expressions.push_back(std::move(out));
  }

  const RegularityAudit audit = audit_regularity(result, rho, betas);
  if (!audit.ok()) throw std::logic_error("bilinear_regularize: postcondition audit failed");
  return result;
}

RegularityAudit audit_regularity(const RegularityResult& result, const BilinearForm& rho,
                                 std::span<const BilinearForm> betas) {
  RegularityAudit audit;
  const std::size_t r = betas.size();
  const std::size_t s = result.independent_forms.size();
  const std::size_t m = result.min_rank_target;
  audit.count_ok = s <= r && result.kept.size() == s && result.expressions.size() == r;
  audit.codim_ok = result.subspace.codim() <= 2 * r * m;

  std::vector<BilinearForm> family = result.independent_forms;
  const BilinearForm rho_restricted = rho.restricted(result.subspace);
  for (const auto& f : family) {
    if (f.dim() != result.subspace.dim()) audit.count_ok = false;
  }
  family.push_back(rho_restricted);
  audit.min_combination_rank = min_combination_rank(family);
  audit.combinations_ok = audit.min_combination_rank >= m;

  audit.expressions_ok = audit.count_ok;
  for (std::size_t i = 0; i < r && audit.expressions_ok; ++i) {
    const auto& e = result.expressions[i];
    if (e.dim() != s + 1) {
      audit.expressions_ok = false;
      break;
    }
    BilinearForm rebuilt(result.subspace.dim());
    for (std::size_t t = 0; t < s; ++t) {
      if (e.get(t)) rebuilt += result.independent_forms[t];
    }
    if (e.get(s)) rebuilt += rho_restricted;
    audit.expressions_ok = rebuilt == betas[i].restricted(result.subspace);
  }
  return audit;
}

}  // namespace f2forms
