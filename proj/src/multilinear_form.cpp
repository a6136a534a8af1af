#include "f2forms/multilinear_form.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

#include "f2forms/errors.hpp"

namespace f2forms {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      throw ShapeError("checked_pow: overflow");
    }
    out *= base;
  }
  return out;
}

namespace {

// Calls fn(index) for every nonzero coefficient, index tuples in lexicographic order.
template <class Fn>
void for_each_monomial(const MultilinearForm& form, Fn&& fn) {
  const std::size_t k = form.arity();
  const std::size_t n = form.dim();
  if (k == 0) {
    if (form.words()[0] & 1U) fn(std::span<const std::size_t>{});
    return;
  }
  std::vector<std::size_t> index(k, 0);
  for (std::size_t f = 0; f < form.fiber_count(); ++f) {
    // index[0..k-2] is the row-major decomposition of f.
    std::size_t rest = f;
    for (std::size_t a = k - 1; a-- > 0;) {
      index[a] = rest % n;
      rest /= n;
    }
    const auto fib = form.fiber(f);
    for (std::size_t w = 0; w < fib.size(); ++w) {
      for (Word bits = fib[w]; bits != 0; bits &= bits - 1) {
        index[k - 1] = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        fn(std::span<const std::size_t>(index));
      }
    }
  }
}

}  // namespace

MultilinearForm::MultilinearForm(std::size_t arity, std::size_t dim) : arity_(arity), dim_(dim) {
  if (arity == 0) {
    fiber_words_ = 1;
    fiber_count_ = 1;
  } else {
    fiber_words_ = words_for(dim);
    fiber_count_ = checked_pow(dim, arity - 1);
  }
  words_.assign(fiber_words_ * fiber_count_, 0);
}

MultilinearForm MultilinearForm::constant(bool value) {
  MultilinearForm f(0, 0);
  f.words_[0] = value ? 1 : 0;
  return f;
}

MultilinearForm MultilinearForm::from_monomials(std::size_t arity, std::size_t dim,
                                                std::span<const std::vector<std::size_t>> monomials) {
  MultilinearForm f(arity, dim);
  for (const auto& m : monomials) f.set_coeff(m);
  return f;
}

MultilinearForm MultilinearForm::from_matrix(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("MultilinearForm::from_matrix: matrix must be square");
  MultilinearForm f(2, m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto fib = f.fiber(r);
    const auto src = m.row(r).words();
    std::copy(src.begin(), src.end(), fib.begin());
  }
  return f;
}

MultilinearForm MultilinearForm::from_functional(const BitVec& v) {
  MultilinearForm f(1, v.dim());
  const auto src = v.words();
  std::copy(src.begin(), src.end(), f.words_.begin());
  return f;
}

std::size_t MultilinearForm::flat_bit(std::span<const std::size_t> index) const {
  if (index.size() != arity_) throw ShapeError("MultilinearForm: index arity mismatch");
  if (arity_ == 0) return 0;
  std::size_t fiber = 0;
  for (std::size_t a = 0; a < arity_; ++a) {
    if (index[a] >= dim_) throw ShapeError("MultilinearForm: index out of range");
    if (a + 1 < arity_) fiber = fiber * dim_ + index[a];
  }
  return fiber * fiber_words_ * kWordBits + index[arity_ - 1];
}

bool MultilinearForm::coeff(std::span<const std::size_t> index) const {
  const std::size_t b = flat_bit(index);
  return (words_[b / kWordBits] >> (b % kWordBits)) & 1U;
}

void MultilinearForm::set_coeff(std::span<const std::size_t> index, bool value) {
  const std::size_t b = flat_bit(index);
  const Word bit = Word{1} << (b % kWordBits);
  if (value) {
    words_[b / kWordBits] |= bit;
  } else {
    words_[b / kWordBits] &= ~bit;
  }
}

void MultilinearForm::flip_coeff(std::span<const std::size_t> index) {
  const std::size_t b = flat_bit(index);
  words_[b / kWordBits] ^= Word{1} << (b % kWordBits);
}

bool MultilinearForm::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t MultilinearForm::weight() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::vector<std::size_t>> MultilinearForm::monomials() const {
  std::vector<std::vector<std::size_t>> out;
  for_each_monomial(*this, [&](std::span<const std::size_t> idx) {
    out.emplace_back(idx.begin(), idx.end());
  });
  return out;
}

BitMatrix MultilinearForm::to_matrix() const {
  if (arity_ != 2) throw ShapeError("MultilinearForm::to_matrix: arity must be 2");
  BitMatrix m(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    const auto src = fiber(r);
    std::copy(src.begin(), src.end(), m.row(r).words().begin());
  }
  return m;
}

BitVec MultilinearForm::to_functional() const {
  if (arity_ != 1) throw ShapeError("MultilinearForm::to_functional: arity must be 1");
  BitVec v(dim_);
  std::copy(words_.begin(), words_.end(), v.words().begin());
  return v;
}

std::uint64_t MultilinearForm::packed_key() const {
  const std::size_t entries = checked_pow(dim_, arity_);
  if (entries > 64) throw ShapeError("MultilinearForm::packed_key: more than 64 coefficients");
  std::uint64_t key = 0;
  if (arity_ == 0) return words_[0] & 1U;
  for (std::size_t f = 0; f < fiber_count_; ++f) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const std::size_t b = f * fiber_words_ * kWordBits + c;
      if ((words_[b / kWordBits] >> (b % kWordBits)) & 1U) key |= std::uint64_t{1} << (f * dim_ + c);
    }
  }
  return key;
}

MultilinearForm MultilinearForm::from_packed_key(std::size_t arity, std::size_t dim,
                                                 std::uint64_t key) {
  MultilinearForm form(arity, dim);
  const std::size_t entries = checked_pow(dim, arity);
  if (entries > 64) throw ShapeError("MultilinearForm::from_packed_key: more than 64 coefficients");
  if (entries < 64 && (key >> entries) != 0) {
    throw ShapeError("MultilinearForm::from_packed_key: key has bits beyond the tensor");
  }
  if (arity == 0) {
    form.words_[0] = key & 1U;
    return form;
  }
  for (std::size_t t = 0; t < entries; ++t) {
    if ((key >> t) & 1U) {
      const std::size_t f = t / dim;
      const std::size_t b = f * form.fiber_words_ * kWordBits + t % dim;
      form.words_[b / kWordBits] |= Word{1} << (b % kWordBits);
    }
  }
  return form;
}

MultilinearForm& MultilinearForm::operator+=(const MultilinearForm& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

void MultilinearForm::require_same_shape(const MultilinearForm& other) const {
  if (arity_ != other.arity_ || dim_ != other.dim_) {
    throw ShapeError("MultilinearForm: arity/dimension mismatch");
  }
}

bool evaluate(const MultilinearForm& form, std::span<const BitVec> args) {
  const std::size_t k = form.arity();
  const std::size_t n = form.dim();
  if (args.size() != k) throw ShapeError("evaluate: wrong number of arguments");
  for (const auto& a : args) {
    if (a.dim() != n) throw ShapeError("evaluate: argument dimension mismatch");
  }
  if (k == 0) return (form.words()[0] & 1U) != 0;
  if (n == 0) return false;

  // Contract axis 0 against args[0], then the next axis, down to one fiber.
  const std::size_t fw = form.fiber_words();
  std::vector<Word> cur(form.words().begin(), form.words().end());
  std::size_t fibers = form.fiber_count();
  for (std::size_t t = 0; t + 1 < k; ++t) {
    const std::size_t slab = (fibers / n) * fw;
    std::vector<Word> next(slab, 0);
    for (std::size_t i : args[t].support()) {
      const Word* src = cur.data() + i * slab;
      for (std::size_t w = 0; w < slab; ++w) next[w] ^= src[w];
    }
    cur = std::move(next);
    fibers /= n;
  }
  Word acc = 0;
  const auto last = args[k - 1].words();
  for (std::size_t w = 0; w < fw; ++w) acc ^= cur[w] & last[w];
  return (std::popcount(acc) & 1) != 0;
}

MultilinearForm permute(const MultilinearForm& form, const Permutation& pi) {
  const std::size_t k = form.arity();
  if (pi.arity() != k) throw ShapeError("permute: arity mismatch");
  if (k <= 1 || pi.is_identity() || form.dim() == 0) return form;

  const std::size_t n = form.dim();
  // New index i_b = old index j_{pi(b)}. Old axis a therefore lands on new
  // axis b = pi^-1(a); record its weight in the new fiber index, or mark it as
  // the new packed axis.
  const Permutation inv = pi.inverse();
  constexpr std::size_t kLast = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> weight(k);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t b = inv(a);
    weight[a] = (b == k - 1) ? kLast : checked_pow(n, k - 2 - b);
  }

  MultilinearForm out(k, n);
  const std::size_t out_fw_bits = out.fiber_words() * kWordBits;
  auto words = out.words();
  for_each_monomial(form, [&](std::span<const std::size_t> j) {
    std::size_t fiber = 0;
    std::size_t last = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if (weight[a] == kLast) {
        last = j[a];
      } else {
        fiber += j[a] * weight[a];
      }
    }
    const std::size_t bit = fiber * out_fw_bits + last;
    words[bit / kWordBits] |= Word{1} << (bit % kWordBits);
  });
  return out;
}

MultilinearForm add(const MultilinearForm& a, const MultilinearForm& b) { return a + b; }

bool is_symmetric(const MultilinearForm& form) {
  const std::size_t k = form.arity();
  for (std::size_t t = 0; t + 1 < k; ++t) {
    if (permute(form, Permutation::transposition(k, t, t + 1)) != form) return false;
  }
  return true;
}

namespace {

// A monomial of the reduced polynomial in (x, y, a_4, ..., a_k): the sets of
// x- and y-variables (at most two each; `none` pads) and the flat index of
// the remaining multilinear slots.
using ExpansionKey = std::array<std::size_t, 5>;

std::vector<ExpansionKey> reduce_mod2(std::vector<ExpansionKey> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<ExpansionKey> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace

bool is_strongly_symmetric(const MultilinearForm& form) {
  const std::size_t k = form.arity();
  if (k < 3) throw ShapeError("is_strongly_symmetric: arity must be at least 3");
  if (!is_symmetric(form)) return false;

  const std::size_t n = form.dim();
  const std::size_t none = n;
  auto var_set = [none](std::size_t u, std::size_t v) -> std::pair<std::size_t, std::size_t> {
    // x_u x_v over F_2 with x_u^2 = x_u.
    if (u == v) return {u, none};
    return {std::min(u, v), std::max(u, v)};
  };

  // Expand both sides of alpha(x, x, y, rest) = alpha(x, y, y, rest) monomial
  // by monomial, reducing squares, then compare the reduced polynomials.
  std::vector<ExpansionKey> lhs;
  std::vector<ExpansionKey> rhs;
  for_each_monomial(form, [&](std::span<const std::size_t> idx) {
    std::size_t rest = 0;
    for (std::size_t a = 3; a < k; ++a) rest = rest * n + idx[a];
    const auto [x1, x2] = var_set(idx[0], idx[1]);
    lhs.push_back({x1, x2, idx[2], none, rest});
    const auto [y1, y2] = var_set(idx[1], idx[2]);
    rhs.push_back({idx[0], none, y1, y2, rest});
  });
  return reduce_mod2(std::move(lhs)) == reduce_mod2(std::move(rhs));
}

MultilinearForm restrict(const MultilinearForm& form, const Subspace& s) {
  const std::size_t k = form.arity();
  const std::size_t n = form.dim();
  if (s.ambient_dim() != n) throw ShapeError("restrict: subspace ambient dimension mismatch");
  if (k == 0) return form;
  const std::size_t d = s.dim();
  if (d == 0) return MultilinearForm(k, 0);

  const auto& basis = s.basis();
  const std::size_t fw = form.fiber_words();
  std::vector<Word> cur(form.words().begin(), form.words().end());

  // Change basis along each leading axis, keeping extent n; entries at
  // positions >= d along transformed axes stay zero.
  for (std::size_t t = 0; t + 1 < k; ++t) {
    const std::size_t prefix = checked_pow(n, t);
    const std::size_t slab = checked_pow(n, k - 2 - t) * fw;
    std::vector<Word> next(cur.size(), 0);
    for (std::size_t p = 0; p < prefix; ++p) {
      for (std::size_t a = 0; a < d; ++a) {
        Word* dst = next.data() + (p * n + a) * slab;
        for (std::size_t i : basis.row(a).support()) {
          const Word* src = cur.data() + (p * n + i) * slab;
          for (std::size_t w = 0; w < slab; ++w) dst[w] ^= src[w];
        }
      }
    }
    cur = std::move(next);
  }

  MultilinearForm out(k, d);
  std::vector<std::size_t> tuple(k - 1, 0);
  BitVec fiber(n);
  for (std::size_t f = 0; f < out.fiber_count(); ++f) {
    std::size_t rest = f;
    std::size_t src_fiber = 0;
    for (std::size_t a = k - 1; a-- > 0;) {
      tuple[a] = rest % d;
      rest /= d;
    }
    for (std::size_t a = 0; a + 1 < k; ++a) src_fiber = src_fiber * n + tuple[a];
    std::copy_n(cur.data() + src_fiber * fw, fw, fiber.words().begin());
    auto dst = out.fiber(f);
    for (std::size_t a = 0; a < d; ++a) {
      if (basis.row(a).dot(fiber)) dst[a / kWordBits] |= Word{1} << (a % kWordBits);
    }
  }
  return out;
}

SymmetricFormEnumerator::SymmetricFormEnumerator(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity) {
  // Nondecreasing index tuples of length k over [0, n).
  std::vector<std::size_t> tuple(arity, 0);
  if (arity == 0) {
    multisets_.push_back({});
  } else if (dim > 0) {
    while (true) {
      multisets_.push_back(tuple);
      if (multisets_.size() > kMaxMultisets) {
        throw BudgetExceeded("SymmetricFormEnumerator: more than 25 index multisets (2^25 forms)");
      }
      std::size_t a = arity;
      while (a > 0 && tuple[a - 1] == dim - 1) --a;
      if (a == 0) break;
      const std::size_t v = tuple[a - 1] + 1;
      for (std::size_t b = a - 1; b < arity; ++b) tuple[b] = v;
    }
  }
  for (const auto& ms : multisets_) {
    MultilinearForm f(arity_, dim_);
    std::vector<std::size_t> perm = ms;
    do {
      f.set_coeff(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    basis_.push_back(std::move(f));
  }
}

MultilinearForm SymmetricFormEnumerator::at(std::uint64_t mask) const {
  if (mask >= size()) throw ShapeError("SymmetricFormEnumerator::at: mask out of range");
  MultilinearForm f(arity_, dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if ((mask >> i) & 1U) f += basis_[i];
  }
  return f;
}

}  // namespace f2forms
