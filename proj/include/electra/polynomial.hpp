#pragma once

#include "electra/algebra.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace electra {

/// Dense univariate polynomial in q; coeff(i) is the coefficient of q^i.
///
/// Trailing zeros are never stored, so the zero polynomial has an empty
/// coefficient list and degree() == -1.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;
  Polynomial(long c) : coeffs_{C(c)} { trim(); }  // NOLINT: implicit scalar promotion
  Polynomial(const C& c) : coeffs_{c} { trim(); }  // NOLINT
  Polynomial(std::initializer_list<C> cs) : coeffs_(cs) { trim(); }
  explicit Polynomial(std::vector<C> cs) : coeffs_(std::move(cs)) { trim(); }

  /// The monomial c * q^k.
  static Polynomial monomial(const C& c, std::size_t k) {
    std::vector<C> cs(k + 1, C(0));
    cs[k] = c;
    return Polynomial(std::move(cs));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<C>& coefficients() const { return coeffs_; }

  C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }
  const C& leading() const { return coeffs_.back(); }

  C evaluate(const C& x) const {
    C acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder. With integer coefficients every step must
  /// divide exactly by the divisor's leading coefficient.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Polynomial rem = a;
    if (a.degree() < b.degree()) return {Polynomial{}, rem};
    std::vector<C> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), C(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
      C c = exact_quotient(rem.leading(), b.leading());
      quot[shift] = c;
      rem -= monomial(c, shift) * b;
    }
    return {Polynomial(std::move(quot)), rem};
  }

  Polynomial pow(unsigned e) const {
    Polynomial out = 1, base = *this;
    while (e) {
      if (e & 1u) out *= base;
      base *= base;
      e >>= 1u;
    }
    return out;
  }

 private:
  static C exact_quotient(const C& a, const C& b) {
    if constexpr (std::is_same_v<C, Integer>) {
      if (a % b != 0) throw ConsistencyError("inexact integer polynomial division");
      return a / b;
    } else {
      return C(a / b);
    }
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// "2 + 3q + q^3" style rendering.
template <class C>
std::string to_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    C c = p.coefficients()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0 || c != 1) out += to_string(c);
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace electra
