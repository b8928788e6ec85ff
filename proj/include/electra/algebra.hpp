#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace electra {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when a combinatorial guard (maximum order) is exceeded.
struct SizeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InversionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly did not (e.g. a nonzero remainder).
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// num/den in lowest terms. Prefer this to the two-argument mpq_class
/// constructor, which does not canonicalize.
inline Rational rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Decimal rendering with `digits` significant digits, computed exactly.
std::string to_decimal(const Rational& r, int digits = 10);

/// k!! with the conventions (-1)!! = 0!! = 1.
Integer double_factorial(long k);

Integer catalan(unsigned long k);

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

}  // namespace electra
