#include "electra/enumeration.hpp"

#include "electra/noncrossing.hpp"
#include "electra/parallel.hpp"
#include "electra/poset.hpp"
#include "electra/power_series.hpp"
#include "electra/wiring.hpp"

#include <cstdlib>

namespace electra {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

// X_1 = 1, X_n = lambda (n-1) X_(n-1) + sum_(k=2)^(n-2) (k-1) X_k X_(n-k)
std::vector<Integer> lambda_recurrence(int lambda, int N) {
  std::vector<Integer> x(static_cast<std::size_t>(N) + 1, 0);
  if (N >= 1) x[1] = 1;
  for (int n = 2; n <= N; ++n) {
    Integer v = Integer(lambda) * (n - 1) * x[static_cast<std::size_t>(n - 1)];
    for (int k = 2; k <= n - 2; ++k) v += Integer(k - 1) * x[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(n - k)];
    x[static_cast<std::size_t>(n)] = v;
  }
  return x;
}

// [t^(n-1)] (1 + sum_k x_k t^k)^n
Integer power_coefficient(const std::vector<Integer>& x, int n) {
  const auto order = static_cast<std::size_t>(n);
  PowerSeries<Integer> s(order);
  s[0] = 1;
  for (std::size_t k = 1; k < order && k < x.size(); ++k) s[k] = x[k];
  return s.pow(static_cast<unsigned>(n))[order - 1];
}

Rational from_decimal(const char* digits) {
  std::string s(digits);
  auto dot = s.find('.');
  std::string frac = s.substr(dot + 1);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  Rational r(Integer(s.substr(0, dot) + frac, 10), scale);
  r.canonicalize();
  return r;
}

}  // namespace

SequenceTable x_sequence(int N) {
  require(N >= 1, "x_sequence: N must be >= 1");
  auto x = lambda_recurrence(2, N);
  return {"X", "recurrence", std::vector<Integer>(x.begin() + 1, x.end())};
}

Integer x_bruteforce(int n, bool allow_large) {
  return Integer(static_cast<unsigned long>(count_full(n, allow_large)));
}

GfIdentityReport check_gf_identity(int n) {
  require(n >= 2 && n <= 12, "check_gf_identity: n must lie in [2, 12]");
  auto x = lambda_recurrence(2, n);
  GfIdentityReport rep{n, power_coefficient(x, n), n * double_factorial(2 * n - 3), false};
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

IntPolynomial touchard_polynomial(int n) {
  require(n >= 1 && n <= kMaxTouchardOrder, "touchard_polynomial: n must lie in [1, 16]");
  IntPolynomial numerator;
  for (int j = 0; j <= n; ++j) {
    Integer c = binomial(2 * n, n - j) - binomial(2 * n, n - j - 1);
    if (j % 2 == 1) c = -c;
    numerator += IntPolynomial::monomial(c, static_cast<std::size_t>(j * (j + 1) / 2));
  }
  auto [quot, rem] = divmod(numerator, IntPolynomial{1, -1}.pow(static_cast<unsigned>(n)));
  if (!rem.is_zero()) throw ConsistencyError("touchard_polynomial: nonzero remainder at n = " + std::to_string(n));
  return quot;
}

IntPolynomial crossing_distribution(int n, bool allow_large) {
  const int limit = allow_large ? kMaxFullOrderLarge : kMaxFullOrder;
  if (n < 1 || n > limit) throw SizeError("crossing_distribution: n must lie in [1, " + std::to_string(limit) + "]");
  std::vector<unsigned long> counts(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  for_each_matching(n, [&](const Matching& m) { ++counts[static_cast<std::size_t>(crossing_count(m))]; });
  std::vector<Integer> cs;
  for (auto c : counts) cs.emplace_back(c);
  return IntPolynomial(std::move(cs));
}

IntPolynomial rank_gf_poset(int n, bool allow_large) {
  std::vector<Integer> cs;
  for (auto s : rank_sizes(build_ep(n, allow_large))) cs.emplace_back(static_cast<unsigned long>(s));
  return IntPolynomial(std::move(cs));
}

IntPolynomial rank_gf_mobius(int n) {
  if (n < 1 || n > 8) throw SizeError("rank_gf_mobius: n must lie in [1, 8]");
  std::vector<IntPolynomial> touchard(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) touchard[static_cast<std::size_t>(k)] = touchard_polynomial(k);

  const auto partitions = enumerate_noncrossing_partitions(n);
  std::vector<IntPolynomial> terms(partitions.size());
  parallel_for(partitions.size(), [&](std::size_t i) {
    const auto& p = partitions[i];
    IntPolynomial term = (n - static_cast<int>(p.block_count())) % 2 == 0 ? 1 : -1;
    Integer weight = 1;
    for (const auto& b : p.blocks()) weight *= catalan(b.size() - 1);
    term = term * IntPolynomial(weight);
    for (int a : nc_regions(p)) term *= touchard[static_cast<std::size_t>(a)];
    terms[i] = std::move(term);
  });
  IntPolynomial total;
  for (const auto& t : terms) total += t;
  return total;
}

IntPolynomial rank_gf_bivariate(int n) {
  if (n < 1 || n > 10) throw SizeError("rank_gf_bivariate: n must lie in [1, 10]");
  // F needs t^1 .. t^(n+1) so that G = t H determines H through t^n.
  const auto order = static_cast<std::size_t>(n + 2);
  PowerSeries<IntPolynomial> f(order);
  f[1] = 1;
  for (std::size_t k = 1; k + 1 < order; ++k) f[k + 1] = touchard_polynomial(static_cast<int>(k));
  auto g = series_compositional_inverse(f);

  PowerSeries<IntPolynomial> h(order - 1);
  for (std::size_t k = 0; k + 1 < order; ++k) h[k] = g[k + 1];
  return h.reciprocal()[static_cast<std::size_t>(n)];
}

Integer highrank(int n, int c) {
  require(n >= 1, "highrank: n must be >= 1");
  require(c >= 0 && c <= n - 1, "highrank: c must lie in [0, n-1]");
  if (c <= n - 2) return binomial(n - 1 + c, c);
  // Subtract the non-full diagrams: one per distinct chord V_i V_(i+1).
  const int adjacent_chords = n >= 3 ? n : n - 1;
  return binomial(2 * n - 2, n - 1) - adjacent_chords;
}

Rational inv_sqrt_e() { return from_decimal("0.606530659712633423603799534991"); }
Rational sqrt_e_minus_one() { return from_decimal("0.648721270700128146848650787814"); }

AsymptoticsReport asymptotics_report(int N) {
  require(N >= 8, "asymptotics_report: N must be >= 8");
  auto x = lambda_recurrence(2, N);
  AsymptoticsReport rep{N, {}, true, true, 0, 0};
  for (int n = 1; n <= N; ++n) {
    AsymptoticsRow row;
    row.n = n;
    row.x = x[static_cast<std::size_t>(n)];
    row.all = double_factorial(2 * n - 1);
    row.d = 1;
    for (int j = 1; j <= n - 2; ++j) row.d += binomial(n, j) * x[static_cast<std::size_t>(n - j)];
    row.y = 0;
    for (int j = 2; j <= n - 2; ++j) row.y += double_factorial(2 * n - 2 * j - 1) * double_factorial(2 * j - 1);
    row.y *= n;
    row.density = Rational(row.x, row.all);
    row.density.canonicalize();
    row.d_ratio = Rational(row.d, row.x);
    row.d_ratio.canonicalize();
    row.y_ratio = Rational(row.y, row.x);
    row.y_ratio.canonicalize();
    row.ratio_checked = n >= 6;
    row.ratio_holds = true;
    if (row.ratio_checked) {
      const Integer& prev = x[static_cast<std::size_t>(n - 1)];
      row.ratio_holds = (2 * n - 1) * prev < row.x && row.x < 2 * n * prev;
      rep.ratio_pass = rep.ratio_pass && row.ratio_holds;
    }
    rep.rows.push_back(row);
  }
  for (int n = 6; n < N; ++n)
    if (!(rep.rows[static_cast<std::size_t>(n - 1)].density < rep.rows[static_cast<std::size_t>(n)].density))
      rep.density_increasing = false;
  rep.density_gap = abs(rep.rows.back().density - inv_sqrt_e());
  rep.d_ratio_gap = abs(rep.rows.back().d_ratio - sqrt_e_minus_one());
  return rep;
}

SequenceTable x_lambda_sequence(int lambda, int N) {
  require(N >= 1 && N <= 20, "x_lambda: N must lie in [1, 20]");
  auto x = lambda_recurrence(lambda, N);
  return {"X_lambda=" + std::to_string(lambda), "recurrence", std::vector<Integer>(x.begin() + 1, x.end())};
}

LambdaReport x_lambda(int lambda, int N) {
  LambdaReport rep{x_lambda_sequence(lambda, N), lambda == -1, true, {}};
  if (rep.catalan_claim_checked)
    for (int n = 1; n <= N; ++n) {
      Integer expected = catalan(static_cast<unsigned long>(n));
      if (n % 2 == 0) expected = -expected;
      rep.catalan_claim_holds = rep.catalan_claim_holds && rep.sequence.at(n) == expected;
    }
  if (lambda >= 1) {
    auto x = lambda_recurrence(lambda, N);
    for (int n = 1; n <= N; ++n) {
      // (1/lambda)_n = prod_(i=0)^(n-1) (1/lambda + i)
      Rational rising = 1;
      for (int i = 0; i < n; ++i) rising *= rational(1 + i * lambda, lambda);
      Rational rhs = n * rising;
      Integer lhs = power_coefficient(x, n);
      rep.conjecture.push_back({lambda, n, lhs, rhs, Rational(lhs) == rhs});
    }
  }
  return rep;
}

}  // namespace electra
