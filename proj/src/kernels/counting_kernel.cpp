#include <omp.h>

#include <algorithm>
#include <vector>

#include "f2forms/errors.hpp"
#include "f2forms/kernels.hpp"

namespace f2forms::kernels {

namespace {

constexpr std::size_t kMaxForms = 24;

void require_shapes(std::span<const BitMatrix> forms, const Subspace& subspace, const BitVec& shift) {
  if (forms.size() > kMaxForms) throw BudgetExceeded("count_values: too many forms");
  if (shift.dim() != subspace.ambient_dim()) throw ShapeError("count_values: shift dimension mismatch");
  if (subspace.dim() >= 32) throw BudgetExceeded("count_values: coset too large");
  for (const auto& m : forms) {
    if (m.rows() != subspace.ambient_dim() || m.cols() != subspace.ambient_dim()) {
      throw ShapeError("count_values: form dimension mismatch");
    }
  }
}

BitVec coset_point(const Subspace& s, const BitVec& shift, std::uint64_t coords) {
  BitVec x = shift;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    if ((coords >> j) & 1U) x ^= s.basis().row(j);
  }
  return x;
}

}  // namespace

namespace serial {

std::vector<std::uint64_t> count_values(std::span<const BitMatrix> forms, const Subspace& subspace,
                                        const BitVec& shift) {
  require_shapes(forms, subspace, shift);
  const std::uint64_t size = std::uint64_t{1} << subspace.dim();
  std::vector<std::uint64_t> counts(std::size_t{1} << forms.size(), 0);
  for (std::uint64_t cx = 0; cx < size; ++cx) {
    const BitVec x = coset_point(subspace, shift, cx);
    for (std::uint64_t cy = 0; cy < size; ++cy) {
      const BitVec y = coset_point(subspace, shift, cy);
      std::size_t value = 0;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].bilinear(x, y)) value |= std::size_t{1} << i;
      }
      ++counts[value];
    }
  }
  return counts;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> count_values(std::span<const BitMatrix> forms, const Subspace& subspace,
                                        const BitVec& shift, int workers) {
  require_shapes(forms, subspace, shift);
  const std::size_t r = forms.size();
  const std::size_t d = subspace.dim();
  const std::uint64_t size = std::uint64_t{1} << d;
  const auto& basis = subspace.basis();

  // x^T M_i as x = shift + sum c_j b_j walks a Gray code: start from
  // shift^T M_i and add b_j^T M_i when coordinate j flips.
  std::vector<BitVec> shift_rows(r);
  std::vector<std::vector<BitVec>> basis_rows(r, std::vector<BitVec>(d));
  for (std::size_t i = 0; i < r; ++i) {
    shift_rows[i] = forms[i].apply_left(shift);
    for (std::size_t j = 0; j < d; ++j) basis_rows[i][j] = forms[i].apply_left(basis.row(j));
  }

  const int threads = resolve_workers(workers);
  const std::uint64_t chunks = std::min<std::uint64_t>(size, static_cast<std::uint64_t>(threads) * 16);
  const std::uint64_t chunk_size = (size + chunks - 1) / chunks;
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(threads),
                                                  std::vector<std::uint64_t>(std::size_t{1} << r, 0));

#pragma omp parallel num_threads(threads)
  {
    auto& counts = partial[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<BitVec> row(r);
    std::vector<std::size_t> step(d);
#pragma omp for schedule(dynamic)
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = c * chunk_size;
      const std::uint64_t hi = std::min(size, lo + chunk_size);
      for (std::uint64_t g = lo; g < hi; ++g) {
        if (g == lo) {
          const std::uint64_t cx = lo ^ (lo >> 1);
          for (std::size_t i = 0; i < r; ++i) {
            row[i] = shift_rows[i];
            for (std::size_t j = 0; j < d; ++j) {
              if ((cx >> j) & 1U) row[i] ^= basis_rows[i][j];
            }
          }
        } else {
          const auto j = static_cast<std::size_t>(std::countr_zero(g));
          for (std::size_t i = 0; i < r; ++i) row[i] ^= basis_rows[i][j];
        }
        // For fixed x the map y -> value is affine in y's coordinates.
        std::size_t value = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (row[i].dot(shift)) value |= std::size_t{1} << i;
        }
        for (std::size_t j = 0; j < d; ++j) {
          std::size_t w = 0;
          for (std::size_t i = 0; i < r; ++i) {
            if (row[i].dot(basis.row(j))) w |= std::size_t{1} << i;
          }
          step[j] = w;
        }
        ++counts[value];
        for (std::uint64_t h = 1; h < size; ++h) {
          value ^= step[static_cast<std::size_t>(std::countr_zero(h))];
          ++counts[value];
        }
      }
    }
  }

  std::vector<std::uint64_t> counts(std::size_t{1} << r, 0);
  for (const auto& p : partial) {
    for (std::size_t v = 0; v < counts.size(); ++v) counts[v] += p[v];
  }
  return counts;
}

}  // namespace parallel

}  // namespace f2forms::kernels
