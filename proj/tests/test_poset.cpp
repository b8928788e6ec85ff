#include "electra/poset.hpp"

#include "electra/algebra.hpp"
#include "fixtures/rank_rows.hpp"

#include <doctest.h>

#include <sstream>

using namespace electra;

namespace {

// Reachability through covers, by plain DFS.
bool reachable(const Poset& p, std::size_t x, std::size_t y) {
  std::vector<std::size_t> stack{x};
  std::vector<bool> seen(p.size());
  while (!stack.empty()) {
    auto z = stack.back();
    stack.pop_back();
    if (z == y) return true;
    for (auto w : p.covers_above(z))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

}  // namespace

TEST_CASE("rank sizes match the table") {
  for (int n = 1; n <= 5; ++n) CHECK(rank_sizes(build_ep(n)) == kRankRows[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("EP_3 is the Boolean lattice") {
  auto p = build_ep(3);
  CHECK(p.elements.size() == 8);
  CHECK(p.order.cover_count() == 12);
  CHECK(p.elements[p.top()] == Matching::antipodal(3));
  CHECK(p.elements[p.bottom()] == Matching::hugging(3));
  CHECK(mobius(p.order, p.bottom(), p.top()) == -1);
  CHECK(check_graded(p.order).pass);
  CHECK(check_eulerian(p.order).pass);
  auto d = check_diamond(p.order);
  CHECK(d.pass);
  // each rank-2 interval in B_3: 3 from the bottom, 3 to the top
  CHECK(d.intervals_checked == 6);
}

TEST_CASE("EP_2 is a chain") {
  auto p = build_ep(2);
  CHECK(p.order.size() == 2);
  CHECK(p.order.cover_count() == 1);
  CHECK(p.order.leq(p.bottom(), p.top()));
}

TEST_CASE("cover counts") {
  CHECK(build_ep(4).order.cover_count() == 150);
  CHECK(build_ep(5).order.cover_count() == 2120);
}

TEST_CASE("checks on EP_4 and EP_5") {
  for (int n : {4, 5}) {
    auto p = build_ep(n);
    CHECK(check_graded(p.order).pass);
    CHECK(check_diamond(p.order).pass);
    CHECK(check_eulerian(p.order).pass);
  }
}

TEST_CASE("covers generate the move order") {
  for (int n = 1; n <= 5; ++n) {
    auto p = build_ep(n);
    for (std::size_t y = 0; y < p.order.size(); ++y)
      for (const auto& mv : legal_moves(p.elements[y])) CHECK(reachable(p.order, p.index_of(mv.result), y));
    if (n <= 4)
      for (std::size_t x = 0; x < p.order.size(); ++x)
        for (std::size_t y = 0; y < p.order.size(); ++y) CHECK(p.order.leq(x, y) == reachable(p.order, x, y));
  }
}

TEST_CASE("coatoms") {
  for (int n = 2; n <= 5; ++n) {
    auto p = build_ep(n);
    const auto& row = kRankRows[static_cast<std::size_t>(n - 1)];
    CHECK(p.order.covers_below(p.top()).size() == row[row.size() - 2]);
  }
}

TEST_CASE("mobius recursion") {
  auto p = build_ep(4);
  MobiusTable mu(p.order);
  CHECK(mu(p.bottom(), p.bottom()) == 1);
  for (auto x : p.order.covers_below(p.top())) CHECK(mu(x, p.top()) == -1);
  CHECK_THROWS_AS(mu(p.top(), p.bottom()), OrderError);
  // sum of mu(bottom, z) over [bottom, y] vanishes for y != bottom
  for (std::size_t y = 0; y < p.order.size(); ++y) {
    if (y == p.bottom()) continue;
    std::int64_t sum = 0;
    p.order.down_set(y).for_each([&](std::size_t z) { sum += mu(p.bottom(), z); });
    CHECK(sum == 0);
  }
}

TEST_CASE("negative controls") {
  // 0 < 1 < 2 with ranks 0, 1, 3
  Poset jump({0, 1, 3}, {{}, {0}, {1}});
  auto g = check_graded(jump);
  CHECK_FALSE(g.pass);
  REQUIRE(g.violations.size() == 1);
  CHECK(g.violations[0] == std::pair<std::size_t, std::size_t>{1, 2});

  // a 3-chain labelled as graded is not Eulerian
  Poset chain({0, 1, 2}, {{}, {0}, {1}});
  CHECK(check_graded(chain).pass);
  CHECK_FALSE(check_eulerian(chain).pass);
  CHECK_FALSE(check_diamond(chain).pass);

  CHECK_THROWS_AS(Poset({0, 1}, {{1}, {0}}), OrderError);
}

TEST_CASE("unimodality") {
  auto u4 = check_unimodal(kRankRows[3]);
  CHECK(u4.pass);
  CHECK(u4.peak == 3);
  auto u6 = check_unimodal(kRankRows[5]);
  CHECK(u6.pass);
  CHECK(u6.peak == 6);
  CHECK(check_unimodal(kRankRows[1]).pass);
  CHECK_FALSE(check_unimodal({1, 3, 2, 4, 1}).pass);
}

TEST_CASE("export") {
  std::ostringstream dot;
  export_poset(build_ep(2), ExportFormat::dot, dot);
  CHECK(dot.str().find("rankdir=BT") != std::string::npos);
  CHECK(dot.str().find("e0 -> e1") != std::string::npos);

  auto p3 = build_ep(3);
  std::ostringstream dot3;
  export_poset(p3, ExportFormat::dot, dot3);
  std::size_t arrows = 0;
  for (std::size_t pos = 0; (pos = dot3.str().find("->", pos)) != std::string::npos; ++pos) ++arrows;
  CHECK(arrows == 12);

  std::ostringstream js;
  export_poset(build_ep(4), ExportFormat::json, js);
  std::istringstream in(js.str());
  auto back = import_json(in);
  std::ostringstream again;
  export_poset(back, ExportFormat::json, again);
  CHECK(again.str() == js.str());

  CHECK(parse_export_format("dot") == ExportFormat::dot);
  CHECK_THROWS_AS(parse_export_format("svg"), std::invalid_argument);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(build_ep(0), SizeError);
  CHECK_THROWS_AS(build_ep(7), SizeError);
}
