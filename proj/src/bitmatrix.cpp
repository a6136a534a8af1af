#include "f2forms/bitmatrix.hpp"

#include <utility>

#include "f2forms/errors.hpp"

namespace f2forms {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVec> rows) {
  for (const auto& r : rows) {
    if (r.dim() != cols) throw ShapeError("BitMatrix::from_rows: row width mismatch");
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::outer(const BitVec& u, const BitVec& v) {
  BitMatrix m(u.dim(), v.dim());
  for (std::size_t i : u.support()) m.rows_[i] = v;
  return m;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c : rows_[r].support()) t.rows_[c].flip(r);
  }
  return t;
}

BitVec BitMatrix::column(std::size_t c) const {
  BitVec v(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(c)) v.flip(r);
  }
  return v;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  if (v.dim() != cols_) throw ShapeError("BitMatrix::apply: dimension mismatch");
  BitVec out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].dot(v)) out.flip(r);
  }
  return out;
}

BitVec BitMatrix::apply_left(const BitVec& v) const {
  if (v.dim() != rows_.size()) throw ShapeError("BitMatrix::apply_left: dimension mismatch");
  BitVec out(cols_);
  for (std::size_t r : v.support()) out ^= rows_[r];
  return out;
}

bool BitMatrix::bilinear(const BitVec& x, const BitVec& y) const {
  return apply_left(x).dot(y);
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other) {
  if (rows() != other.rows() || cols_ != other.cols_) {
    throw ShapeError("BitMatrix: shape mismatch");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) rows_[r] ^= other.rows_[r];
  return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("BitMatrix::operator*: inner dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.rows_[r] = b.apply_left(a.rows_[r]);
  return out;
}

Echelon row_echelon(std::size_t cols, std::vector<BitVec> rows) {
  Echelon e;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    e.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

Echelon row_echelon(const BitMatrix& m) { return row_echelon(m.cols(), m.row_data()); }

std::size_t rank(const BitMatrix& m) {
  // Forward elimination only; cheaper than the full reduced form.
  std::vector<BitVec> rows = m.row_data();
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (rows[r].get(c)) rows[r] ^= rows[next];
    }
    ++next;
  }
  return next;
}

std::optional<BitVec> solve_linear(const BitMatrix& a, const BitVec& b) {
  if (b.dim() != a.rows()) throw ShapeError("solve_linear: right-hand side dimension mismatch");
  const std::size_t n = a.cols();
  std::vector<BitVec> augmented;
  augmented.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVec row(n + 1);
    for (std::size_t c : a.row(r).support()) row.set(c);
    row.set(n, b.get(r));
    augmented.push_back(std::move(row));
  }
  const Echelon e = row_echelon(n + 1, std::move(augmented));
  BitVec x(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;
    x.set(e.pivots[i], e.rows[i].get(n));
  }
  return x;
}

RankFactorization rank_factorization(const BitMatrix& m) {
  // Every row of M lies in the span of the echelon rows E_t, and in reduced
  // form its coefficient on E_t is its entry at pivot column p_t. Hence
  // M = sum_t col_{p_t}(M) E_t^T.
  Echelon e = row_echelon(m);
  RankFactorization f;
  for (std::size_t t = 0; t < e.rows.size(); ++t) {
    f.left.push_back(m.column(e.pivots[t]));
    f.right.push_back(std::move(e.rows[t]));
  }
  return f;
}

}  // namespace f2forms
