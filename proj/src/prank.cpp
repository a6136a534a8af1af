#include "f2forms/prank.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "f2forms/errors.hpp"
#include "f2forms/kernels.hpp"

namespace f2forms {

std::vector<std::size_t> complement_axes(std::size_t arity, const std::vector<std::size_t>& axes) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arity; ++a) {
    if (!std::binary_search(axes.begin(), axes.end(), a)) out.push_back(a);
  }
  return out;
}

void validate(const PartitionCertificate& certificate) {
  const std::size_t k = certificate.arity;
  for (const auto& s : certificate.summands) {
    const auto& axes = s.left_axes;
    if (axes.empty() || axes.size() >= k) {
      throw ShapeError("certificate: axis set must be a proper nonempty subset");
    }
    if (!std::is_sorted(axes.begin(), axes.end()) ||
        std::adjacent_find(axes.begin(), axes.end()) != axes.end() || axes.back() >= k) {
      throw ShapeError("certificate: axis set must be sorted, distinct and in range");
    }
    if (s.left.arity() != axes.size() || s.right.arity() != k - axes.size()) {
      throw ShapeError("certificate: factor arity does not match its axis set");
    }
    if (s.left.dim() != certificate.dim || s.right.dim() != certificate.dim) {
      throw ShapeError("certificate: factor dimension mismatch");
    }
  }
}

MultilinearForm summand_to_form(std::size_t arity, std::size_t dim, const PartitionSummand& summand) {
  const auto right_axes = complement_axes(arity, summand.left_axes);
  MultilinearForm out(arity, dim);
  const auto left_monomials = summand.left.monomials();
  const auto right_monomials = summand.right.monomials();
  std::vector<std::size_t> index(arity);
  for (const auto& l : left_monomials) {
    for (std::size_t t = 0; t < l.size(); ++t) index[summand.left_axes[t]] = l[t];
    for (const auto& r : right_monomials) {
      for (std::size_t t = 0; t < r.size(); ++t) index[right_axes[t]] = r[t];
      out.flip_coeff(index);
    }
  }
  return out;
}

MultilinearForm certificate_to_form(const PartitionCertificate& certificate) {
  validate(certificate);
  MultilinearForm out(certificate.arity, certificate.dim);
  for (const auto& s : certificate.summands) {
    out += summand_to_form(certificate.arity, certificate.dim, s);
  }
  return out;
}

bool verify_certificate(const MultilinearForm& form, const PartitionCertificate& certificate) {
  if (form.arity() != certificate.arity || form.dim() != certificate.dim) {
    throw ShapeError("verify_certificate: form and certificate shapes differ");
  }
  return certificate_to_form(certificate) == form;
}

BilinearRank bilinear_prank(const BilinearForm& form) {
  const RankFactorization f = rank_factorization(form.matrix());
  BilinearRank out;
  out.rank = f.left.size();
  out.certificate.arity = 2;
  out.certificate.dim = form.dim();
  for (std::size_t t = 0; t < f.left.size(); ++t) {
    out.certificate.summands.push_back({{0}, MultilinearForm::from_functional(f.left[t]),
                                        MultilinearForm::from_functional(f.right[t])});
  }
  return out;
}

Dyadic bias(const MultilinearForm& form, const EnumOptions& options) {
  const std::size_t k = form.arity();
  if (k == 0) return Dyadic((form.words()[0] & 1U) ? -1 : 1, 0);
  const std::size_t exponent = (k - 1) * form.dim();
  if (exponent > 62 || (std::uint64_t{1} << exponent) > options.max_enum) {
    throw BudgetExceeded("bias: 2^" + std::to_string(exponent) +
                         " contractions exceed the enumeration budget");
  }
  const std::uint64_t zeros = kernels::parallel::zero_contraction_count(form, options.workers);
  return Dyadic(static_cast<std::int64_t>(zeros), static_cast<unsigned>(exponent));
}

double analytic_rank(const MultilinearForm& form, const EnumOptions& options) {
  const Dyadic b = bias(form, options);
  if (b.numerator() <= 0) throw PreconditionViolated("analytic_rank: bias is not positive");
  return static_cast<double>(b.exponent()) - std::log2(static_cast<double>(b.numerator()));
}

namespace {

// Position weights mapping a flat index over a subset of axes to its
// contribution to the flat index over all k axes.
std::vector<std::uint64_t> axis_offsets(std::size_t arity, std::size_t dim,
                                        const std::vector<std::size_t>& axes) {
  const std::size_t count = checked_pow(dim, axes.size());
  std::vector<std::uint64_t> out(count, 0);
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rest = flat;
    std::uint64_t offset = 0;
    for (std::size_t t = axes.size(); t-- > 0;) {
      offset += (rest % dim) * checked_pow(dim, arity - 1 - axes[t]);
      rest /= dim;
    }
    out[flat] = offset;
  }
  return out;
}

struct OracleShape {
  std::size_t entries;         // dim^arity
  std::uint64_t generator_bound;
  bool feasible(std::uint64_t max_enum) const {
    if (entries > 40) return false;
    const std::uint64_t table = std::uint64_t{1} << entries;
    if (table > max_enum) return false;
    return generator_bound <= max_enum / table;
  }
};

// Axis sets containing axis 0 (each unordered split {I, I^c} once).
std::vector<std::vector<std::size_t>> splits(std::size_t arity) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << arity) - 1; ++mask) {
    if ((mask & 1U) == 0) continue;
    std::vector<std::size_t> axes;
    for (std::size_t a = 0; a < arity; ++a) {
      if ((mask >> a) & 1U) axes.push_back(a);
    }
    out.push_back(std::move(axes));
  }
  return out;
}

std::uint64_t nonzero_forms(std::size_t dim, std::size_t arity) {
  const std::size_t entries = checked_pow(dim, arity);
  if (entries >= 63) return ~std::uint64_t{0} >> 1;
  return (std::uint64_t{1} << entries) - 1;
}

OracleShape oracle_shape(std::size_t arity, std::size_t dim) {
  OracleShape shape{0, 0};
  if (dim > 64) {
    shape.entries = 64;
    return shape;
  }
  shape.entries = checked_pow(dim, arity);
  if (shape.entries > 40) return shape;
  for (const auto& axes : splits(arity)) {
    const std::uint64_t l = nonzero_forms(dim, axes.size());
    const std::uint64_t r = nonzero_forms(dim, arity - axes.size());
    if (l != 0 && r > (~std::uint64_t{0} >> 1) / l) {
      shape.generator_bound = ~std::uint64_t{0} >> 1;
      return shape;
    }
    shape.generator_bound += l * r;
  }
  return shape;
}

}  // namespace

ExactPrankOracle::ExactPrankOracle(std::size_t arity, std::size_t dim, const EnumOptions& options)
    : arity_(arity), dim_(dim) {
  if (arity < 2) throw ShapeError("ExactPrankOracle: partition rank needs arity >= 2");
  const OracleShape shape = oracle_shape(arity, dim);
  if (!shape.feasible(options.max_enum)) {
    throw BudgetExceeded("ExactPrankOracle: form space of arity " + std::to_string(arity) +
                         " over F_2^" + std::to_string(dim) + " exceeds the enumeration budget");
  }

  // Every product of a nonzero form on I with a nonzero form on I^c.
  for (const auto& left_axes : splits(arity)) {
    const auto right_axes = complement_axes(arity, left_axes);
    const auto left_offsets = axis_offsets(arity, dim, left_axes);
    const auto right_offsets = axis_offsets(arity, dim, right_axes);
    const std::uint64_t left_count = nonzero_forms(dim, left_axes.size());
    const std::uint64_t right_count = nonzero_forms(dim, right_axes.size());
    for (std::uint64_t l = 1; l <= left_count; ++l) {
      for (std::uint64_t r = 1; r <= right_count; ++r) {
        std::uint64_t key = 0;
        for (std::uint64_t lb = l; lb != 0; lb &= lb - 1) {
          const std::uint64_t lo = left_offsets[static_cast<std::size_t>(std::countr_zero(lb))];
          for (std::uint64_t rb = r; rb != 0; rb &= rb - 1) {
            key ^= std::uint64_t{1} << (lo + right_offsets[static_cast<std::size_t>(std::countr_zero(rb))]);
          }
        }
        generators_.push_back(key);
      }
    }
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

  table_.assign(std::size_t{1} << shape.entries, kernels::kUnreached);
  table_[0] = 0;
  layer_sizes_.push_back(1);
  std::vector<std::uint64_t> frontier{0};
  for (std::uint8_t label = 1; !frontier.empty(); ++label) {
    if (label == kernels::kUnreached) throw BudgetExceeded("ExactPrankOracle: too many layers");
    kernels::parallel::expand_layer(frontier, generators_, table_, label, options.workers);
    frontier.clear();
    for (std::uint64_t key = 0; key < table_.size(); ++key) {
      if (table_[key] == label) frontier.push_back(key);
    }
    if (!frontier.empty()) layer_sizes_.push_back(frontier.size());
  }
}

std::size_t ExactPrankOracle::query(const MultilinearForm& form) const {
  if (form.arity() != arity_ || form.dim() != dim_) {
    throw ShapeError("ExactPrankOracle::query: form shape does not match the oracle");
  }
  const std::uint8_t r = table_[form.packed_key()];
  if (r == kernels::kUnreached) throw std::logic_error("ExactPrankOracle: unreachable form");
  return r;
}

std::size_t exact_prank_oracle(const MultilinearForm& form, const EnumOptions& options) {
  if (form.arity() < 2) throw ShapeError("exact_prank_oracle: partition rank needs arity >= 2");
  if (form.arity() == 2 && !oracle_shape(2, form.dim()).feasible(options.max_enum)) {
    return rank(form.to_matrix());
  }
  return ExactPrankOracle(form.arity(), form.dim(), options).query(form);
}

DistanceResult min_distance_to_symmetric(const MultilinearForm& form, const EnumOptions& options) {
  const SymmetricFormEnumerator symmetric(form.dim(), form.arity());
  const ExactPrankOracle oracle(form.arity(), form.dim(), options);
  DistanceResult best;
  best.candidates = symmetric.size();
  bool found = false;
  for (std::uint64_t mask = 0; mask < symmetric.size(); ++mask) {
    MultilinearForm sigma = symmetric.at(mask);
    const std::size_t d = oracle.query(form + sigma);
    if (!found || d < best.distance) {
      found = true;
      best.distance = d;
      best.witness = std::move(sigma);
      best.witness_index = mask;
    }
  }
  return best;
}

}  // namespace f2forms
