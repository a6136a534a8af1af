#include <omp.h>

#include <algorithm>
#include <vector>

#include "f2forms/errors.hpp"
#include "f2forms/kernels.hpp"

namespace f2forms::kernels {

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

namespace {

bool all_zero(const Word* w, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (w[i] != 0) return false;
  }
  return true;
}

void xor_into(Word* dst, const Word* src, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) dst[i] ^= src[i];
}

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

// Contraction state of one enumeration level: the tensor with its leading
// axis contracted against x, updated one basis slab at a time as x walks a
// Gray code.
struct Level {
  std::size_t arity;  // arity of the tensor being contracted
  std::size_t slab;   // words per leading-axis slice
};

class ContractionCounter {
 public:
  ContractionCounter(std::size_t arity, std::size_t n, std::size_t fw) : n_(n), fw_(fw) {
    for (std::size_t a = arity; a >= 2; --a) {
      levels_.push_back({a, checked_pow(n, a - 2) * fw});
      scratch_.emplace_back(levels_.back().slab, 0);
    }
  }

  // Zero contractions of `tensor` (at level `depth`) over all remaining variables.
  std::uint64_t count(const Word* tensor, std::size_t depth) {
    if (depth == levels_.size()) return all_zero(tensor, fw_) ? 1 : 0;
    std::vector<Word>& cur = scratch_[depth];
    std::fill(cur.begin(), cur.end(), 0);
    return walk(tensor, depth, cur.data(), 0, std::uint64_t{1} << n_);
  }

  // Walks Gray-code indices [lo, hi) of the variable at `depth`, with `cur`
  // already holding the contraction for gray(lo).
  std::uint64_t walk(const Word* tensor, std::size_t depth, Word* cur, std::uint64_t lo,
                     std::uint64_t hi) {
    const std::size_t slab = levels_[depth].slab;
    const bool leaf = depth + 1 == levels_.size();
    std::uint64_t total = 0;
    for (std::uint64_t g = lo; g < hi; ++g) {
      if (g != lo) {
        const auto b = static_cast<std::size_t>(std::countr_zero(g));
        xor_into(cur, tensor + b * slab, slab);
      }
      if (leaf) {
        total += all_zero(cur, slab) ? 1 : 0;
      } else {
        total += count(cur, depth + 1);
      }
    }
    return total;
  }

  // Contraction of `tensor` against the vector with bits gray(index).
  void seed(const Word* tensor, std::size_t depth, Word* cur, std::uint64_t index) const {
    const std::size_t slab = levels_[depth].slab;
    std::fill(cur, cur + slab, 0);
    const std::uint64_t x = gray(index);
    for (std::size_t b = 0; b < n_; ++b) {
      if ((x >> b) & 1U) xor_into(cur, tensor + b * slab, slab);
    }
  }

  std::size_t levels() const { return levels_.size(); }
  std::size_t slab(std::size_t depth) const { return levels_[depth].slab; }

 private:
  std::size_t n_;
  std::size_t fw_;
  std::vector<Level> levels_;
  std::vector<std::vector<Word>> scratch_;
};

void require_enumerable(const MultilinearForm& form) {
  if (form.arity() == 0) throw ShapeError("zero_contraction_count: arity must be at least 1");
  if (form.dim() >= 63) throw BudgetExceeded("zero_contraction_count: dimension too large");
}

}  // namespace

namespace serial {

std::uint64_t zero_contraction_count(const MultilinearForm& form) {
  require_enumerable(form);
  if (form.dim() == 0) return 1;
  ContractionCounter counter(form.arity(), form.dim(), form.fiber_words());
  return counter.count(form.words().data(), 0);
}

}  // namespace serial

namespace parallel {

std::uint64_t zero_contraction_count(const MultilinearForm& form, int workers) {
  require_enumerable(form);
  if (form.dim() == 0 || form.arity() == 1) return serial::zero_contraction_count(form);

  const std::size_t n = form.dim();
  const int threads = resolve_workers(workers);
  const std::uint64_t outer = std::uint64_t{1} << n;
  const std::uint64_t chunks = std::min<std::uint64_t>(outer, static_cast<std::uint64_t>(threads) * 64);
  const std::uint64_t chunk_size = (outer + chunks - 1) / chunks;
  const Word* tensor = form.words().data();

  std::uint64_t total = 0;
#pragma omp parallel num_threads(threads) reduction(+ : total)
  {
    ContractionCounter counter(form.arity(), n, form.fiber_words());
    std::vector<Word> cur(counter.slab(0));
#pragma omp for schedule(dynamic)
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = c * chunk_size;
      const std::uint64_t hi = std::min(outer, lo + chunk_size);
      if (lo >= hi) continue;
      counter.seed(tensor, 0, cur.data(), lo);
      total += counter.walk(tensor, 0, cur.data(), lo, hi);
    }
  }
  return total;
}

}  // namespace parallel

}  // namespace f2forms::kernels
