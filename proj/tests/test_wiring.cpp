#include "electra/wiring.hpp"

#include "electra/algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace electra;

namespace {

// A1=0 B1=1 A2=2 B2=3 ...
Matching two_crossing() { return Matching(2, {2, 3, 0, 1}); }
Matching two_nested() { return Matching(2, {3, 2, 1, 0}); }

// Brute-force fullness straight from the definition: for every chord V_i V_j
// some wire has one endpoint on each open side.
bool full_by_definition(const Matching& m) {
  const int n = m.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto inside = [&](int p) { return p >= 2 * i - 1 && p <= 2 * j - 2; };
      bool crossed = false;
      for (auto [a, b] : m.wires()) crossed = crossed || (inside(a) != inside(b));
      if (!crossed) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("matching validation") {
  CHECK_THROWS_AS(Matching(2, {1, 0, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Matching(2, {1, 2, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Matching(2, {1, 0}), std::invalid_argument);
  CHECK(to_string(two_crossing()) == "{A1-A2, B1-B2}");
}

TEST_CASE("crossing count") {
  for (int n = 1; n <= 6; ++n) CHECK(crossing_count(Matching::hugging(n)) == 0);
  CHECK(crossing_count(Matching::antipodal(3)) == 3);
  CHECK(crossing_count(two_crossing()) == 1);
  CHECK(crossing_count(Matching::antipodal(6)) == 15);
}

TEST_CASE("fullness") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(is_full(Matching::hugging(n)));
    CHECK(is_full(Matching::antipodal(n)));
  }
  CHECK_FALSE(is_full(two_nested()));
  REQUIRE(first_dividing_line(two_nested()).has_value());
  CHECK(*first_dividing_line(two_nested()) == std::pair{1, 2});
  CHECK(is_full(two_crossing()));

  for (int n = 1; n <= 5; ++n)
    for_each_matching(n, [](const Matching& m) { CHECK(is_full(m) == full_by_definition(m)); });
}

TEST_CASE("uncross") {
  auto c = crossings(two_crossing());
  REQUIRE(c.size() == 1);
  CHECK(uncross(two_crossing(), c[0], Resolution::A) == Matching::hugging(2));
  CHECK(uncross(two_crossing(), c[0], Resolution::B) == two_nested());
  CHECK_THROWS_AS(uncross(Matching::hugging(2), c[0], Resolution::A), MoveError);
  CHECK_THROWS_AS(make_crossing({0, 1}, {2, 3}), MoveError);
  CHECK(make_crossing({2, 0}, {3, 1}) == Crossing{0, 2, 1, 3});

  for (int n = 1; n <= 5; ++n)
    for_each_matching(n, [](const Matching& m) {
      for (const auto& x : crossings(m))
        for (auto mode : {Resolution::A, Resolution::B}) CHECK(crossing_count(uncross(m, x, mode)) < crossing_count(m));
    });
}

TEST_CASE("legal moves") {
  CHECK(legal_moves(Matching::hugging(4)).empty());
  auto two = legal_moves(two_crossing());
  REQUIRE(two.size() == 1);
  CHECK(two[0].mode == Resolution::A);
  CHECK(two[0].result == Matching::hugging(2));
  // one resolution of each crossing contracts a boundary edge
  auto top3 = legal_moves(Matching::antipodal(3));
  CHECK(top3.size() == 3);
  CHECK_THROWS_AS(legal_moves(two_nested()), PreconditionError);

  for (int n = 1; n <= 6; ++n)
    for (const auto& m : enumerate_full(n))
      if (crossing_count(m) > 0) CHECK_FALSE(legal_moves(m).empty());
}

TEST_CASE("full enumeration") {
  const std::size_t expected[] = {1, 2, 8, 52, 464, 5184, 68928};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_full(n).size() == expected[n - 1]);

  for (int n = 1; n <= 5; ++n) {
    std::vector<Matching> brute;
    for_each_matching(n, [&](const Matching& m) {
      if (full_by_definition(m)) brute.push_back(m);
    });
    CHECK(enumerate_full(n) == brute);
  }

  for (int n = 1; n <= 6; ++n) {
    const int top = n * (n - 1) / 2;
    for (const auto& m : enumerate_full(n)) {
      CHECK(crossing_count(m) <= top);
      CHECK((crossing_count(m) == top) == (m == Matching::antipodal(n)));
      CHECK((crossing_count(m) == 0) == (m == Matching::hugging(n)));
    }
  }
  CHECK_THROWS_AS(enumerate_full(0), SizeError);
  CHECK_THROWS_AS(enumerate_full(9), SizeError);
}

TEST_CASE("canonical key") {
  auto h = Matching::hugging(3), a = Matching::antipodal(3);
  CHECK(canonical_key(h) == canonical_key(Matching::hugging(3)));
  CHECK(canonical_key(h) != canonical_key(a));
  std::set<std::string> keys;
  for (const auto& m : enumerate_full(5)) {
    CHECK(decode_key(canonical_key(m)) == m);
    keys.insert(canonical_key(m));
  }
  CHECK(keys.size() == 464);
}
