#pragma once

#include "electra/algebra.hpp"
#include "electra/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace electra {

/// Multiplicative inverse of a unit of the coefficient ring, if it is one.
inline std::optional<Rational> unit_inverse(const Rational& r) {
  if (r == 0) return std::nullopt;
  return Rational(1 / r);
}

inline std::optional<Integer> unit_inverse(const Integer& z) {
  if (z == 1 || z == -1) return z;
  return std::nullopt;
}

template <class C>
std::optional<Polynomial<C>> unit_inverse(const Polynomial<C>& p) {
  if (p.degree() != 0) return std::nullopt;
  auto inv = unit_inverse(p.leading());
  if (!inv) return std::nullopt;
  return Polynomial<C>(*inv);
}

/// Truncated power series in t over a commutative ring R.
///
/// A series of order N stores the coefficients of t^0 .. t^(N-1) and is
/// exact modulo t^N; every operation returns a series of the same order.
template <class R>
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order, R(0)) {}
  PowerSeries(std::size_t order, const std::vector<R>& cs) : coeffs_(order, R(0)) {
    for (std::size_t i = 0; i < cs.size() && i < order; ++i) coeffs_[i] = cs[i];
  }

  /// The series t.
  static PowerSeries variable(std::size_t order) {
    PowerSeries s(order);
    if (order > 1) s.coeffs_[1] = R(1);
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const R& operator[](std::size_t i) const { return coeffs_.at(i); }
  R& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.order(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.order(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    check_same(a, b);
    PowerSeries out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
      if (a.coeffs_[i] == R(0)) continue;
      for (std::size_t j = 0; i + j < a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  friend PowerSeries operator*(const R& c, PowerSeries a) {
    for (auto& x : a.coeffs_) x = c * x;
    return a;
  }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

  PowerSeries pow(unsigned e) const {
    PowerSeries out(order());
    if (order() > 0) out.coeffs_[0] = R(1);
    PowerSeries base = *this;
    while (e) {
      if (e & 1u) out = out * base;
      base = base * base;
      e >>= 1u;
    }
    return out;
  }

  /// 1/f; requires an invertible constant term.
  PowerSeries reciprocal() const {
    if (order() == 0) return *this;
    auto inv0 = unit_inverse(coeffs_[0]);
    if (!inv0) throw InversionError("series reciprocal: constant term is not a unit");
    PowerSeries out(order());
    out.coeffs_[0] = *inv0;
    for (std::size_t m = 1; m < order(); ++m) {
      R acc(0);
      for (std::size_t k = 1; k <= m; ++k) acc += coeffs_[k] * out.coeffs_[m - k];
      out.coeffs_[m] = -(*inv0 * acc);
    }
    return out;
  }

  /// f(g(t)); g must have zero constant term.
  PowerSeries compose(const PowerSeries& g) const {
    check_same(*this, g);
    if (order() > 0 && g.coeffs_[0] != R(0)) throw DomainError("compose: inner series has nonzero constant term");
    // Horner in g
    PowerSeries out(order());
    for (std::size_t k = order(); k-- > 0;) {
      out = out * g;
      out.coeffs_[0] += coeffs_[k];
    }
    return out;
  }

 private:
  static void check_same(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw DimensionError("power series truncation orders differ");
  }

  std::vector<R> coeffs_;
};

/// Compositional inverse g with f(g(t)) = t modulo t^order, built one
/// coefficient at a time. Coefficients may themselves be polynomials in a
/// second variable; the inverse is taken with respect to t only.
template <class R>
PowerSeries<R> series_compositional_inverse(const PowerSeries<R>& f) {
  const std::size_t order = f.order();
  if (order < 2) throw InversionError("compositional inverse needs truncation order >= 2");
  if (f[0] != R(0)) throw InversionError("compositional inverse: nonzero constant term");
  auto inv1 = unit_inverse(f[1]);
  if (!inv1) throw InversionError("compositional inverse: linear coefficient is not invertible");

  PowerSeries<R> g(order);
  g[1] = *inv1;
  for (std::size_t m = 2; m < order; ++m) {
    // With g_m = 0, [t^m] f(g) = f_1 g_m + (terms from lower g_k); solve for g_m.
    R residual = f.compose(g)[m];
    g[m] = -(*inv1 * residual);
  }
  return g;
}

}  // namespace electra
