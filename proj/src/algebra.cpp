#include "electra/algebra.hpp"

#include <cctype>

namespace electra {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || (!den.empty() && den.front() == '-'))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  std::string d(den.front() == '+' ? den.substr(1) : den);
  Integer dz(d, 10);
  if (dz == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(Integer(n, 10), dz);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 1) digits = 1;
  if (r == 0) return "0";
  Rational a = abs(r);
  // exponent e with 10^e <= a < 10^(e+1)
  long e = 0;
  Rational p = 1;
  while (a >= p * 10) {
    p *= 10;
    ++e;
  }
  while (a < p) {
    p /= 10;
    --e;
  }
  long shift = digits - 1 - e;
  Integer ten_s;
  mpz_ui_pow_ui(ten_s.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
  Rational scaled = shift >= 0 ? Rational(a * ten_s) : Rational(a / ten_s);
  // round half up
  Integer n = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  Integer limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  if (n == limit) {
    n /= 10;
    --shift;
  }
  std::string s = n.get_str();
  if (shift > 0) {
    if (static_cast<long>(s.size()) <= shift) s.insert(0, static_cast<std::size_t>(shift) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(shift), ".");
  } else {
    s.append(static_cast<std::size_t>(-shift), '0');
  }
  return r < 0 ? "-" + s : s;
}

Integer double_factorial(long k) {
  if (k < -1) throw DomainError("double factorial undefined for k < -1");
  Integer out = 1;
  for (long i = k; i > 1; i -= 2) out *= i;
  return out;
}

Integer catalan(unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), 2 * k, k);
  return out / (k + 1);
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace electra
