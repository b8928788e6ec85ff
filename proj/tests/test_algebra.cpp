#include "electra/algebra.hpp"
#include "electra/matrix.hpp"
#include "electra/noncrossing.hpp"
#include "electra/polynomial.hpp"
#include "electra/power_series.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace electra;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return rational(num(rng), den(rng));
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("rational strings") {
  CHECK(to_string(rational(6, 4)) == "3/2");
  CHECK(to_string(rational(-4, 2)) == "-2");
  CHECK(parse_rational("-10/4") == rational(-5, 2));
  CHECK(parse_rational("+3/6") == rational(1, 2));
  CHECK_THROWS_AS(parse_rational("10/-4"), std::invalid_argument);
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("010/08") == rational(5, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_decimal(Rational(68928, 135135)) == "0.5100677101");
  CHECK(to_decimal(Rational(-1, 3), 4) == "-0.3333");
}

TEST_CASE("rational field laws") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) * c == a * c + b * c);
    Rational r = a;
    r.canonicalize();
    CHECK(r == a);
  }
}

TEST_CASE("double factorial and catalan") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(13) == 135135);
  CHECK_THROWS_AS(double_factorial(-3), DomainError);
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("determinant") {
  CHECK(det(RationalMatrix::identity(3)) == 1);
  CHECK(det(RationalMatrix{{1, 2}, {3, 4}}) == -2);
  RationalMatrix hilbert(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) hilbert(i, j) = Rational(1, static_cast<long>(i + j + 1));
  CHECK(det(hilbert) == Rational(1, 2160));
  CHECK_THROWS_AS(det(RationalMatrix(2, 3)), DimensionError);
  CHECK(det(RationalMatrix(0, 0)) == 1);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto n = static_cast<std::size_t>(1 + t % 4);
    auto a = random_matrix(rng, n), b = random_matrix(rng, n);
    CHECK(det(a) * det(b) == det(a * b));
  }
}

TEST_CASE("solve") {
  RationalMatrix b{{1, 2}, {3, 4}};
  CHECK(solve(RationalMatrix::identity(2), b) == b);
  CHECK(solve(RationalMatrix{{2}}, RationalMatrix{{1}}) == RationalMatrix{{Rational(1, 2)}});
  CHECK(solve(RationalMatrix{{2, 1}, {1, 2}}, RationalMatrix{{1}, {0}}) ==
        RationalMatrix{{Rational(2, 3)}, {Rational(-1, 3)}});
  CHECK_THROWS_AS(solve(RationalMatrix{{1, 2}, {2, 4}}, RationalMatrix{{1}, {1}}), SingularMatrixError);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix(rng, 4);
    if (det(a) == 0) continue;
    auto x = random_matrix(rng, 4);
    CHECK(solve(a, a * x) == x);
  }
}

TEST_CASE("polynomial arithmetic") {
  IntPolynomial p{2, 1};  // 2 + q
  CHECK(p.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK((p * p) == IntPolynomial{4, 4, 1});
  CHECK(p.evaluate(3) == 5);
  CHECK(to_string(IntPolynomial{5, 6, 3, 1}) == "5 + 6q + 3q^2 + q^3");
  CHECK(to_string(IntPolynomial{0, -1}) == "-q");

  IntPolynomial one_minus_q{1, -1};
  auto [quot, rem] = divmod(IntPolynomial{2, -3, 0, 1}, one_minus_q.pow(2));
  CHECK(rem.is_zero());
  CHECK(quot == IntPolynomial{2, 1});
  CHECK_THROWS_AS(divmod(IntPolynomial{0, 1}, IntPolynomial{0, 2}), ConsistencyError);
  auto [q2, r2] = divmod(IntPolynomial{1, 0, 1}, IntPolynomial{0, 1});
  CHECK(q2 == IntPolynomial{0, 1});
  CHECK(r2 == IntPolynomial{1});
}

TEST_CASE("compositional inverse") {
  using S = PowerSeries<Rational>;
  CHECK(series_compositional_inverse(S::variable(5)) == S::variable(5));

  // t + 3t^2 + 15t^3 inverts to t - 3t^2 + 3t^3 through t^3
  S f(4, {0, 1, 3, 15});
  CHECK(series_compositional_inverse(f) == S(4, {0, 1, -3, 3}));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    S g(7);
    g[1] = random_rational(rng);
    if (g[1] == 0) g[1] = 1;
    for (std::size_t k = 2; k < 7; ++k) g[k] = random_rational(rng);
    auto h = series_compositional_inverse(g);
    CHECK(g.compose(h) == S::variable(7));
    CHECK(series_compositional_inverse(h) == g);
  }

  CHECK_THROWS_AS(series_compositional_inverse(S(4, {0, 0, 1})), InversionError);
  CHECK_THROWS_AS(series_compositional_inverse(S(4, {1, 1})), InversionError);
  CHECK_THROWS_AS(series_compositional_inverse(S(1)), InversionError);
}

TEST_CASE("compositional inverse over polynomial coefficients") {
  using S = PowerSeries<IntPolynomial>;
  // f = t + q t^2 ; f(g) = t
  S f(6, {IntPolynomial{}, IntPolynomial{1}, IntPolynomial{0, 1}});
  auto g = series_compositional_inverse(f);
  CHECK(f.compose(g) == S::variable(6));
  CHECK(g[2] == IntPolynomial{0, -1});
  CHECK(g[3] == IntPolynomial{0, 0, 2});
  CHECK_THROWS_AS(series_compositional_inverse(S(4, {IntPolynomial{}, IntPolynomial{0, 1}})), InversionError);
}

TEST_CASE("noncrossing partitions") {
  auto nc3 = enumerate_noncrossing_partitions(3);
  CHECK(nc3.size() == 5);
  CHECK(std::find(nc3.begin(), nc3.end(), NoncrossingPartition(3, {{1, 3}, {2}})) != nc3.end());

  auto nc4 = enumerate_noncrossing_partitions(4);
  CHECK(nc4.size() == 14);
  CHECK_THROWS_AS(NoncrossingPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
  for (const auto& p : nc4) CHECK(to_string(p) != "[13][24]");

  auto nc1 = enumerate_noncrossing_partitions(1);
  REQUIRE(nc1.size() == 1);
  CHECK(to_string(nc1.front()) == "[1]");

  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_noncrossing_partitions(n).size() == catalan(static_cast<unsigned long>(n)).get_ui());
  CHECK_THROWS_AS(enumerate_noncrossing_partitions(0), SizeError);
  CHECK_THROWS_AS(enumerate_noncrossing_partitions(13), SizeError);
}

TEST_CASE("noncrossing regions") {
  CHECK(nc_regions(NoncrossingPartition(5, {{1}, {2}, {3}, {4}, {5}})) == std::vector<int>{5});
  CHECK(nc_regions(NoncrossingPartition(2, {{1, 2}})) == std::vector<int>{1, 1});

  NoncrossingPartition nine(9, {{1}, {2, 3}, {4}, {5, 7, 9}, {6}, {8}});
  auto regions = nine.n() ? nc_regions(nine) : std::vector<int>{};
  CHECK(regions.size() == 4);
  auto sorted = regions;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 2, 4});

  for (int n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_noncrossing_partitions(n)) {
      auto r = nc_regions(p);
      CHECK(r.size() == static_cast<std::size_t>(n + 1) - p.block_count());
      CHECK(std::accumulate(r.begin(), r.end(), 0) == n);
    }
}
