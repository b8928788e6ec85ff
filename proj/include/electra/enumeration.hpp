#pragma once

#include "electra/algebra.hpp"
#include "electra/polynomial.hpp"

#include <string>
#include <vector>

namespace electra {

/// A 1-indexed integer sequence together with how it was produced.
struct SequenceTable {
  std::string name;
  std::string method;
  std::vector<Integer> values;  ///< values[k] is the term with index k + 1

  int size() const { return static_cast<int>(values.size()); }
  const Integer& at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

/// X_1 .. X_N from the recurrence X_n = 2(n-1)X_(n-1) + sum_(k=2)^(n-2) (k-1) X_k X_(n-k).
SequenceTable x_sequence(int N);

/// |enumerate_full(n)|; n = 9 needs allow_large.
Integer x_bruteforce(int n, bool allow_large = false);

struct GfIdentityReport {
  int n;
  Integer lhs;  ///< [t^(n-1)] X(t)^n with X(t) = 1 + sum X_k t^k
  Integer rhs;  ///< n (2n-3)!!
  bool pass;
};

/// Requires 2 <= n <= 12.
GfIdentityReport check_gf_identity(int n);

constexpr int kMaxTouchardOrder = 16;

/// Crossing polynomial of all matchings on 2n points, from the closed
/// alternating sum divided exactly by (1-q)^n. Requires 1 <= n <= 16.
IntPolynomial touchard_polynomial(int n);

/// Brute force: sum over every matching of q^crossings. n <= 8 (9 with allow_large).
IntPolynomial crossing_distribution(int n, bool allow_large = false);

/// Rank generating function of EP_n read off the built poset.
IntPolynomial rank_gf_poset(int n, bool allow_large = false);

/// Rank generating function by Möbius inversion over NC_n. Requires 1 <= n <= 8.
IntPolynomial rank_gf_mobius(int n);

/// Rank generating function as [t^n] t / G(t, q), where G is the inverse in t
/// of F(t, q) = t * sum_(k>=0) T_k(q) t^k with T_0 = 1. Requires 1 <= n <= 10.
IntPolynomial rank_gf_bivariate(int n);

/// |EP_(n, C(n,2) - c)| in closed form; requires 0 <= c <= n - 1.
Integer highrank(int n, int c);

struct AsymptoticsRow {
  int n;
  Integer x;                 ///< X_n
  Integer all;               ///< (2n-1)!!
  Integer d;                 ///< D_n = 1 + sum_(j=1)^(n-2) C(n,j) X_(n-j)
  Integer y;                 ///< Y_n = n sum_(j=2)^(n-2) (2n-2j-1)!! (2j-1)!!
  Rational density;          ///< X_n / (2n-1)!!
  Rational d_ratio;          ///< D_n / X_n
  Rational y_ratio;          ///< Y_n / X_n
  bool ratio_checked;        ///< n >= 6
  bool ratio_holds;          ///< (2n-1) X_(n-1) < X_n < 2n X_(n-1)
};

struct AsymptoticsReport {
  int N;
  std::vector<AsymptoticsRow> rows;
  bool ratio_pass;           ///< every checked row holds
  bool density_increasing;   ///< X_n/(2n-1)!! strictly increasing over 6 <= n <= N
  Rational density_gap;      ///< |X_N/(2N-1)!! - e^(-1/2)|
  Rational d_ratio_gap;      ///< |D_N/X_N - (sqrt(e) - 1)|
};

/// e^(-1/2) and sqrt(e) - 1 to 30 decimal places, as exact rationals.
Rational inv_sqrt_e();
Rational sqrt_e_minus_one();

/// Requires N >= 8.
AsymptoticsReport asymptotics_report(int N);

struct LambdaConjectureRow {
  int lambda;
  int n;
  Integer lhs;   ///< [t^(n-1)] X_lambda(t)^n with X_lambda(t) = 1 + sum X_(k,lambda) t^k
  Rational rhs;  ///< n (1/lambda)_n
  bool agree;
};

struct LambdaReport {
  SequenceTable sequence;
  /// For lambda = -1: whether X_(n,-1) = (-1)^(n+1) C_n for every n.
  bool catalan_claim_checked;
  bool catalan_claim_holds;
  std::vector<LambdaConjectureRow> conjecture;  ///< empty unless lambda >= 1
};

/// Sequence X_(n,lambda), n <= N <= 20, from
/// X_(1,lambda) = 1, X_n = lambda (n-1) X_(n-1) + sum_(k=2)^(n-2) (k-1) X_k X_(n-k).
SequenceTable x_lambda_sequence(int lambda, int N);
LambdaReport x_lambda(int lambda, int N);

}  // namespace electra
