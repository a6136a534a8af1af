#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "f2forms/bilinear_form.hpp"
#include "f2forms/dyadic.hpp"
#include "f2forms/multilinear_form.hpp"

namespace f2forms {

/// Limits for exhaustive computations.
struct EnumOptions {
  /// Maximum number of elementary evaluations an exhaustive routine may perform.
  std::uint64_t max_enum = std::uint64_t{1} << 30;
  /// OpenMP worker count; <= 0 uses the runtime default.
  int workers = 0;
};

/// One product term left(x_I) * right(x_{[k] \ I}). `left_axes` is the sorted
/// 0-based set I; the right factor takes the complementary axes in increasing order.
struct PartitionSummand {
  std::vector<std::size_t> left_axes;
  MultilinearForm left;
  MultilinearForm right;
};

/// A list of summands whose sum is a claimed form; its length bounds the
/// partition rank of that form from above.
struct PartitionCertificate {
  std::size_t arity = 0;
  std::size_t dim = 0;
  std::vector<PartitionSummand> summands;

  std::size_t size() const { return summands.size(); }
};

/// Complement of `axes` in {0, ..., arity-1}.
std::vector<std::size_t> complement_axes(std::size_t arity, const std::vector<std::size_t>& axes);

/// Throws ShapeError unless every summand has a proper nonempty sorted axis
/// set and factors of matching arity and dimension.
void validate(const PartitionCertificate& certificate);

/// The product left(x_I) right(x_{I^c}) as a k-linear form.
MultilinearForm summand_to_form(std::size_t arity, std::size_t dim, const PartitionSummand& summand);
MultilinearForm certificate_to_form(const PartitionCertificate& certificate);
bool verify_certificate(const MultilinearForm& form, const PartitionCertificate& certificate);

struct BilinearRank {
  std::size_t rank = 0;
  /// rank-many summands u_t(x) v_t(y) from a rank factorization.
  PartitionCertificate certificate;
};

BilinearRank bilinear_prank(const BilinearForm& form);

/// E (-1)^form over all inputs, exactly. For arity k >= 1 this is the
/// fraction of (x_1, ..., x_{k-1}) whose contraction form(x_1, ..., x_{k-1}, .)
/// vanishes. Requires 2^{(k-1) n} <= max_enum.
Dyadic bias(const MultilinearForm& form, const EnumOptions& options = {});

/// -log2 bias(form). Throws PreconditionViolated when the bias is not positive.
double analytic_rank(const MultilinearForm& form, const EnumOptions& options = {});

/// Exact partition rank for every form of a given (arity, dim) by
/// breadth-first layering from zero over the set of partition-rank-one forms.
/// Forms are addressed by MultilinearForm::packed_key().
class ExactPrankOracle {
 public:
  ExactPrankOracle(std::size_t arity, std::size_t dim, const EnumOptions& options = {});

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  std::size_t query(const MultilinearForm& form) const;
  /// Largest partition rank attained by any form of this shape.
  std::size_t max_rank() const { return layer_sizes_.size() - 1; }
  /// layer_sizes()[r] = number of forms of partition rank exactly r.
  const std::vector<std::uint64_t>& layer_sizes() const { return layer_sizes_; }
  std::size_t generator_count() const { return generators_.size(); }

 private:
  std::size_t arity_;
  std::size_t dim_;
  std::vector<std::uint64_t> generators_;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint64_t> layer_sizes_;
};

/// One-off query. Bilinear forms whose tables exceed the budget fall back to
/// matrix rank, which equals the partition rank for arity 2.
std::size_t exact_prank_oracle(const MultilinearForm& form, const EnumOptions& options = {});

struct DistanceResult {
  std::size_t distance = 0;
  /// First symmetric sigma (in enumeration order) with prank(form + sigma) == distance.
  MultilinearForm witness;
  std::uint64_t witness_index = 0;
  std::uint64_t candidates = 0;
};

/// min over all symmetric sigma of the exact partition rank of form + sigma.
DistanceResult min_distance_to_symmetric(const MultilinearForm& form, const EnumOptions& options = {});

}  // namespace f2forms
