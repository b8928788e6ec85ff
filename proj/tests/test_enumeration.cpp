#include "electra/enumeration.hpp"

#include "electra/wiring.hpp"
#include "fixtures/rank_rows.hpp"

#include <doctest.h>

using namespace electra;

namespace {

IntPolynomial row_polynomial(int n) {
  std::vector<Integer> cs;
  for (auto v : rank_row(n)) cs.emplace_back(static_cast<unsigned long>(v));
  return IntPolynomial(std::move(cs));
}

Integer row_sum(int n) {
  Integer s = 0;
  for (auto v : rank_row(n)) s += static_cast<unsigned long>(v);
  return s;
}

}  // namespace

TEST_CASE("recurrence") {
  auto x = x_sequence(12);
  const char* expected[] = {"1",       "2",        "8",        "52",        "464",        "5184",
                            "68928",   "1057584",  "18345536", "354570112", "7551674624", "175700025728"};
  for (int n = 1; n <= 12; ++n) CHECK(x.at(n) == Integer(expected[n - 1]));
  for (int n = 1; n <= 8; ++n) CHECK(x.at(n) == row_sum(n));
  CHECK_THROWS_AS(x_sequence(0), DomainError);
}

TEST_CASE("brute force count") {
  CHECK(x_bruteforce(2) == 2);
  CHECK(x_bruteforce(5) == 464);
  CHECK(x_bruteforce(7) == 68928);
  for (int n = 1; n <= 6; ++n) CHECK(count_full(n) == enumerate_full(n).size());
  CHECK_THROWS_AS(x_bruteforce(9), SizeError);
}

TEST_CASE("generating function identity") {
  auto r2 = check_gf_identity(2);
  CHECK(r2.lhs == 2);
  CHECK(r2.rhs == 2);
  CHECK(check_gf_identity(3).lhs == 9);
  CHECK(check_gf_identity(4).lhs == 60);
  for (int n = 2; n <= 12; ++n) CHECK(check_gf_identity(n).pass);
  CHECK_THROWS_AS(check_gf_identity(1), DomainError);
  CHECK_THROWS_AS(check_gf_identity(13), DomainError);
}

TEST_CASE("touchard polynomials") {
  CHECK(touchard_polynomial(1) == IntPolynomial{1});
  CHECK(touchard_polynomial(2) == IntPolynomial{2, 1});
  CHECK(touchard_polynomial(3) == IntPolynomial{5, 6, 3, 1});
  for (int n = 1; n <= 16; ++n) {
    auto t = touchard_polynomial(n);
    CHECK(t.degree() == n * (n - 1) / 2);
    CHECK(t.leading() == 1);
    CHECK(t.evaluate(1) == double_factorial(2 * n - 1));
  }
  CHECK(crossing_distribution(2) == IntPolynomial{2, 1});
  CHECK(crossing_distribution(3) == IntPolynomial{5, 6, 3, 1});
  for (int n = 1; n <= 6; ++n) CHECK(crossing_distribution(n) == touchard_polynomial(n));
  CHECK_THROWS_AS(touchard_polynomial(17), DomainError);
}

TEST_CASE("rank generating functions") {
  CHECK(rank_gf_poset(2) == IntPolynomial{1, 1});
  CHECK(rank_gf_poset(3) == IntPolynomial{1, 3, 3, 1});
  CHECK(rank_gf_mobius(2) == IntPolynomial{1, 1});
  CHECK(rank_gf_bivariate(3) == IntPolynomial{1, 3, 3, 1});
  for (int n = 1; n <= 5; ++n) {
    auto p = rank_gf_poset(n);
    CHECK(p == row_polynomial(n));
    CHECK(rank_gf_mobius(n) == p);
    CHECK(rank_gf_bivariate(n) == p);
  }
  for (int n = 6; n <= 8; ++n) {
    CHECK(rank_gf_mobius(n) == row_polynomial(n));
    CHECK(rank_gf_bivariate(n) == row_polynomial(n));
  }
  auto x = x_sequence(10);
  for (int n = 1; n <= 10; ++n) {
    auto b = rank_gf_bivariate(n);
    CHECK(b.evaluate(1) == x.at(n));
    CHECK(b.coeff(0) == 1);
  }
}

TEST_CASE("high rank closed forms") {
  CHECK(highrank(5, 3) == 35);
  CHECK(highrank(5, 4) == 65);
  CHECK(highrank(4, 0) == 1);
  for (int n = 1; n <= 8; ++n) {
    const auto& row = rank_row(n);
    for (int c = 0; c <= n - 1; ++c) CHECK(highrank(n, c) == static_cast<unsigned long>(row[row.size() - 1 - static_cast<std::size_t>(c)]));
  }
  CHECK_THROWS_AS(highrank(4, 4), DomainError);
  CHECK_THROWS_AS(highrank(4, -1), DomainError);
}

TEST_CASE("asymptotics") {
  auto rep = asymptotics_report(12);
  REQUIRE(rep.rows.size() == 12);
  CHECK(rep.rows[6].density == rational(68928, 135135));
  CHECK(rep.rows[6].ratio_holds);
  CHECK(rep.rows[1].d == 1);
  CHECK(rep.ratio_pass);
  CHECK(rep.density_increasing);
  CHECK(rep.density_gap < rational(8, 100));
  // the density approaches e^(-1/2) from below and D_n / X_n drifts toward sqrt(e) - 1
  CHECK(rep.rows.back().density < inv_sqrt_e());
  CHECK(abs(rep.rows[9].d_ratio - sqrt_e_minus_one()) > rep.d_ratio_gap);
  CHECK_THROWS_AS(asymptotics_report(7), DomainError);
}

TEST_CASE("lambda sequences") {
  auto two = x_lambda_sequence(2, 12);
  auto x = x_sequence(12);
  CHECK(two.values == x.values);

  auto one = x_lambda_sequence(1, 6);
  CHECK(one.values == std::vector<Integer>{1, 1, 2, 7, 34, 206});

  // (-1)^(n+1) C_(n-1): the recurrence with lambda = -1 shifts the Catalan index by one
  auto neg = x_lambda_sequence(-1, 12);
  for (int n = 1; n <= 12; ++n) {
    Integer c = catalan(static_cast<unsigned long>(n - 1));
    CHECK(neg.at(n) == (n % 2 == 1 ? c : Integer(-c)));
  }
  auto rep = x_lambda(-1, 12);
  CHECK(rep.catalan_claim_checked);
  CHECK_FALSE(rep.catalan_claim_holds);
  CHECK(rep.conjecture.empty());

  auto table = x_lambda(2, 10);
  REQUIRE(table.conjecture.size() == 10);
  CHECK(table.conjecture[1].lhs == 2);
  CHECK(table.conjecture[1].rhs == rational(3, 2));
  CHECK_THROWS_AS(x_lambda_sequence(2, 21), DomainError);
}
