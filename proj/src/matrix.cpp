#include "electra/matrix.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace electra {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                         const std::vector<std::size_t>& col_idx) const {
  RationalMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shapes differ");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return a + (-b); }

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix out = a;
  for (auto& x : out.data_) x = -x;
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Rational det(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("det of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      result = -result;
    }
    result *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return result;
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square()) throw DimensionError("solve: coefficient matrix is not square");
  if (b.rows() != a.rows()) throw DimensionError("solve: right-hand side has wrong row count");
  const std::size_t n = a.rows(), m = b.cols();
  RationalMatrix lhs = a, rhs = b;
  std::vector<std::size_t> col_perm(n);
  std::iota(col_perm.begin(), col_perm.end(), 0);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    Rational best = 0;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (abs(lhs(i, j)) > best) {
          best = abs(lhs(i, j));
          pr = i;
          pc = j;
        }
    if (best == 0)
      throw SingularMatrixError("solve: singular matrix (zero pivot at elimination step " + std::to_string(k) + " of " +
                                std::to_string(n) + ")");
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lhs(pr, j), lhs(k, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(rhs(pr, j), rhs(k, j));
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(lhs(i, pc), lhs(i, k));
      std::swap(col_perm[pc], col_perm[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (lhs(i, k) == 0) continue;
      Rational f = lhs(i, k) / lhs(k, k);
      for (std::size_t j = k; j < n; ++j) lhs(i, j) -= f * lhs(k, j);
      for (std::size_t j = 0; j < m; ++j) rhs(i, j) -= f * rhs(k, j);
    }
  }

  RationalMatrix y(n, m);
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t j = 0; j < m; ++j) {
      Rational acc = rhs(k, j);
      for (std::size_t l = k + 1; l < n; ++l) acc -= lhs(k, l) * y(l, j);
      y(k, j) = acc / lhs(k, k);
    }
  // undo the column permutation: unknown col_perm[k] was solved in slot k
  RationalMatrix x(n, m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < m; ++j) x(col_perm[k], j) = y(k, j);
  return x;
}

Rational max_abs_difference(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_difference: shapes differ");
  Rational best = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational d = abs(a(i, j) - b(i, j));
      if (d > best) best = d;
    }
  return best;
}

}  // namespace electra
