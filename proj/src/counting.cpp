#include "f2forms/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "f2forms/errors.hpp"
#include "f2forms/kernels.hpp"
#include "f2forms/regularity.hpp"

namespace f2forms {

double counting_threshold(std::size_t r, std::size_t d, double epsilon) {
  return 4.0 * static_cast<double>(r) + 8.0 * static_cast<double>(d) + 4.0 * std::log2(1.0 / epsilon);
}

CountingReport counting_check(std::span<const BilinearForm> alphas, const Coset& coset, double epsilon,
                              const EnumOptions& options) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("counting_check: epsilon must be positive and finite");
  }
  const std::size_t n = coset.subspace.ambient_dim();
  if (coset.shift.dim() != n) throw ShapeError("counting_check: shift dimension mismatch");
  for (const auto& a : alphas) {
    if (a.dim() != n) throw ShapeError("counting_check: form dimension mismatch");
  }
  const std::size_t pair_bits = 2 * coset.subspace.dim();
  if (pair_bits > 62 || (std::uint64_t{1} << pair_bits) > options.max_enum) {
    throw BudgetExceeded("counting_check: 2^" + std::to_string(pair_bits) +
                         " pairs exceed the enumeration budget");
  }

  std::vector<BitMatrix> matrices;
  for (const auto& a : alphas) matrices.push_back(a.matrix());

  CountingReport report;
  report.r = alphas.size();
  report.d = coset.codim();
  report.epsilon = epsilon;
  report.coset_size = coset.size();
  report.value_counts = kernels::parallel::count_values(matrices, coset.subspace, coset.shift, options.workers);
  report.min_count = *std::min_element(report.value_counts.begin(), report.value_counts.end());
  report.surjective = report.min_count > 0;

  // |C|^2 and min_count 2^r are both below 2^64, and (1 - eps) |C|^2 only
  // rescales 1 - eps by a power of two, so these long double products are
  // exact for any eps >= 2^-11.
  const long double pairs = std::ldexp(1.0L, static_cast<int>(pair_bits));
  const long double scaled_min = std::ldexp(static_cast<long double>(report.min_count), static_cast<int>(report.r));
  report.epsilon_achieved = static_cast<double>(1.0L - scaled_min / pairs);
  report.conclusion_holds = scaled_min >= (1.0L - static_cast<long double>(epsilon)) * pairs;

  report.min_rank = min_combination_rank(alphas);
  report.hypothesis_holds =
      report.r == 0 ||
      static_cast<double>(report.min_rank) > counting_threshold(report.r, report.d, epsilon);
  return report;
}

}  // namespace f2forms
