#include "electra/network.hpp"

#include "electra/poset.hpp"
#include "fixtures/networks.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace electra;
using namespace fixtures;

namespace {

RationalMatrix y_response() {
  Rational off = rational(1, 3), diag = rational(-2, 3);
  return RationalMatrix{{diag, off, off}, {off, diag, off}, {off, off, diag}};
}

CircularPair pair1(int p, int q) { return {{p}, {q}}; }

}  // namespace

TEST_CASE("embedding validation") {
  CHECK(single_edge().face_count() == 3);
  CHECK(triangle().face_count() == 5);
  CHECK_NOTHROW(triangle_doubled());
  // the triangle with V2's darts swapped puts V3V1 on the wrong side
  CHECK_THROWS_AS(CircularPlanarGraph(3, 0, {{0, 1}, {1, 2}, {2, 0}}, {{5, 0}, {2, 1}, {4, 3}}), EmbeddingError);
  CHECK_THROWS_AS(CircularPlanarGraph(2, 0, {{0, 1}}, {{0}, {}}), EmbeddingError);
  CHECK_THROWS_AS(CircularPlanarGraph(2, 0, {{0, 1}}, {{1}, {0}}), EmbeddingError);
  CHECK_THROWS_AS(CircularPlanarGraph(2, 0, {{0, 5}}, {{0}, {1}}), EmbeddingError);
  CHECK_THROWS_AS(Network(single_edge(), {Rational(0)}), std::invalid_argument);
  auto y = y_graph();
  CHECK(y.cw_next(0) == 2);
  CHECK(y.ccw_prev(0) == 4);
  CHECK_FALSE(triangle().cw_next(5).has_value());
}

TEST_CASE("response matrices") {
  CHECK(response_matrix(unit_network(CircularPlanarGraph::empty(4))) == RationalMatrix(4, 4));
  CHECK(response_matrix(unit_network(single_edge())) == RationalMatrix{{-1, 1}, {1, -1}});
  CHECK(response_matrix(unit_network(y_graph())) == y_response());

  // an interior vertex floating free of the boundary is dropped
  CircularPlanarGraph island(2, 2, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}});
  std::vector<int> pruned;
  CHECK(response_matrix(unit_network(island), &pruned) == RationalMatrix{{-1, 1}, {1, -1}});
  CHECK(pruned == std::vector<int>{2, 3});
}

TEST_CASE("circular pairs") {
  CHECK(circular_pairs(2).size() == 1);
  CHECK(circular_pairs(3).size() == 3);
  CHECK(circular_pairs(4).size() == 8);
  CHECK(circular_pairs(1).empty());
  for (int n = 2; n <= 7; ++n) {
    auto all = circular_pairs(n);
    std::size_t biggest = 0;
    for (const auto& c : all) {
      biggest = std::max(biggest, c.p.size());
      CHECK(normalize(c, n) == c);
    }
    CHECK(biggest == static_cast<std::size_t>(n / 2));
    CHECK(std::set<CircularPair>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(normalize(pair1(1, 0), 2) == pair1(0, 1));
  CHECK(normalize(CircularPair{{2, 3}, {1, 0}}, 4) == CircularPair{{0, 1}, {3, 2}});
  CHECK_THROWS_AS(normalize(CircularPair{{0, 2}, {1, 3}}, 4), std::invalid_argument);
  CHECK(to_string(CircularPair{{0, 1}, {3, 2}}) == "(1 2;4 3)");
}

TEST_CASE("circular minors") {
  CHECK(circular_minor(RationalMatrix(3, 3), pair1(0, 1)) == 0);
  CHECK(circular_minor(response_matrix(unit_network(single_edge())), pair1(0, 1)) == 1);
  CHECK(circular_minor(y_response(), pair1(0, 1)) == rational(1, 3));
}

TEST_CASE("connections") {
  CHECK(has_connection(single_edge(), pair1(0, 1)));
  CHECK_FALSE(has_connection(CircularPlanarGraph::empty(2), pair1(0, 1)));
  for (const auto& c : circular_pairs(3)) CHECK(has_connection(triangle(), c));
  CHECK(pi_set(CircularPlanarGraph::empty(4)).empty());
  CHECK(pi_set(single_edge()) == ConnectionSet{pair1(0, 1)});
  CHECK(pi_set(triangle()).size() == 3);
  CHECK(pi_set(y_graph()) == pi_set(triangle()));

  // a path V1 - V2 - V3 does not connect V1 to V3 through the boundary vertex V2
  CircularPlanarGraph path(3, 0, {{0, 1}, {1, 2}}, {{0}, {2, 1}, {3}});
  CHECK_FALSE(has_connection(path, pair1(0, 2)));
  // two disjoint paths through a 2x2 grid of interior vertices
  auto g = recover_graph(Matching::antipodal(4));
  CHECK(pi_set(g).size() == circular_pairs(4).size());
}

TEST_CASE("response axioms") {
  CHECK(verify_response_axioms(with_conductances(single_edge(), {rational(7, 3)})).pass);
  auto y = verify_response_axioms(unit_network(y_graph()));
  CHECK(y.pass);
  CHECK(y.pairs_checked == 3);

  std::mt19937_64 rng(20240611);
  auto full4 = enumerate_full(4);
  std::uniform_int_distribution<std::size_t> pick(0, full4.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    auto net = random_network(recover_graph(full4[pick(rng)]), rng);
    auto rep = verify_response_axioms(net);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
  }
}

TEST_CASE("Y-Delta") {
  auto delta = y_delta(unit_network(y_graph()), 3);
  CHECK(delta.graph.interior() == 0);
  CHECK(delta.conductance == std::vector<Rational>(3, rational(1, 3)));
  CHECK(response_matrix(delta) == y_response());

  auto y123 = with_conductances(y_graph(), {1, 2, 3});
  auto d123 = y_delta(y123, 3);
  CHECK(d123.conductance == std::vector<Rational>{rational(1, 3), 1, rational(1, 2)});
  CHECK(d123.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(response_matrix(d123) == response_matrix(y123));

  auto back = delta_y(delta, 0, 1, 2);
  CHECK(back.conductance == std::vector<Rational>(3, Rational(1)));
  auto ones = delta_y(unit_network(triangle()), 0, 1, 2);
  CHECK(ones.conductance == std::vector<Rational>(3, Rational(3)));
  CHECK(response_matrix(ones) == response_matrix(unit_network(triangle())));

  // the round trip restores the conductances of the original spokes
  auto again = delta_y(d123, 0, 1, 2);
  CHECK(again.conductance == y123.conductance);
  CHECK(again.graph == y123.graph);
  CHECK(delta_y(d123, 0, 2, 1).conductance == std::vector<Rational>{1, 3, 2});

  CHECK_THROWS_AS(y_delta(unit_network(y_graph()), 0), TransformationError);
  CHECK_THROWS_AS(y_delta(unit_network(single_edge()), 1), TransformationError);
  CHECK_THROWS_AS(delta_y(unit_network(y_graph()), 0, 1, 2), TransformationError);
  CHECK_THROWS_AS(delta_y(unit_network(triangle_doubled()), 0, 1, 2), TransformationError);
}

TEST_CASE("reductions") {
  // parallel
  auto doubled = unit_network(triangle_doubled());
  auto merged = reduce(doubled, Reduction::parallel, 0);
  CHECK(merged.graph.edge_count() == 3);
  CHECK(merged.conductance[0] == 2);
  CHECK(response_matrix(merged) == response_matrix(doubled));
  CHECK_THROWS_AS(reduce(unit_network(triangle()), Reduction::parallel, 0), TransformationError);

  // series: V1 - w - V2
  CircularPlanarGraph chain(2, 1, {{0, 2}, {2, 1}}, {{0}, {3}, {1, 2}});
  auto series = reduce(unit_network(chain), Reduction::series, 2);
  CHECK(series.graph.interior() == 0);
  CHECK(series.conductance == std::vector<Rational>{rational(1, 2)});
  CHECK(response_matrix(series) == response_matrix(unit_network(chain)));

  // self-loop at V1 beside the edge V1V2
  CircularPlanarGraph looped(2, 0, {{0, 1}, {0, 0}}, {{0, 2, 3}, {1}});
  auto looped_net = with_conductances(looped, {1, 5});
  auto unlooped = reduce(looped_net, Reduction::self_loop, 1);
  CHECK(unlooped.graph == single_edge());
  CHECK(response_matrix(unlooped) == response_matrix(looped_net));
  CHECK_THROWS_AS(reduce(looped_net, Reduction::self_loop, 0), TransformationError);

  // spike: interior pendant hanging off V1
  CircularPlanarGraph spiky(2, 1, {{0, 1}, {0, 2}}, {{0, 2}, {1}, {3}});
  auto spiky_net = with_conductances(spiky, {1, 4});
  auto trimmed = reduce(spiky_net, Reduction::spike, 2);
  CHECK(trimmed.graph == single_edge());
  CHECK(response_matrix(trimmed) == response_matrix(spiky_net));
  CHECK_THROWS_AS(reduce(spiky_net, Reduction::spike, 0), TransformationError);
  CHECK_THROWS_AS(reduce(spiky_net, Reduction::series, 2), TransformationError);

  // pi is unchanged by every move
  CHECK(pi_set(merged.graph) == pi_set(doubled.graph));
  CHECK(pi_set(series.graph) == pi_set(chain));
  CHECK(pi_set(unlooped.graph) == pi_set(looped));
  CHECK(pi_set(trimmed.graph) == pi_set(spiky));
}

TEST_CASE("contraction and deletion") {
  CHECK(delete_edge(single_edge(), 0) == CircularPlanarGraph::empty(2));
  auto c = contract_edge(y_graph(), 0);
  CHECK(c.interior() == 0);
  CHECK(c.edge_count() == 2);
  CHECK(c.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(c.rotation(0) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(contract_edge(single_edge(), 0), IllegalMoveError);
  CircularPlanarGraph looped(2, 0, {{0, 1}, {0, 0}}, {{0, 2, 3}, {1}});
  CHECK_THROWS_AS(contract_edge(looped, 1), IllegalMoveError);
}

TEST_CASE("criticality") {
  CHECK(is_critical(CircularPlanarGraph::empty(3)));
  CHECK(is_critical(triangle()));
  CHECK(is_critical(y_graph()));
  CHECK_FALSE(is_critical(triangle_doubled()));
  CircularPlanarGraph chain(2, 1, {{0, 2}, {2, 1}}, {{0}, {3}, {1, 2}});
  CHECK_FALSE(is_critical(chain));
}

TEST_CASE("medial matchings") {
  for (int n = 1; n <= 5; ++n) CHECK(medial_matching(CircularPlanarGraph::empty(n)).matching == Matching::hugging(n));
  CHECK(medial_matching(single_edge()).matching == Matching(2, {2, 3, 0, 1}));
  CHECK(medial_matching(y_graph()).matching == Matching::antipodal(3));
  CHECK(medial_matching(triangle()).matching == Matching::antipodal(3));

  auto lens = medial_matching(triangle_doubled());
  CHECK_FALSE(lens.matching.has_value());
  CHECK(lens.diagnostic.find("lens") != std::string::npos);

  CircularPlanarGraph looped(2, 0, {{0, 1}, {0, 0}}, {{0, 2, 3}, {1}});
  CHECK_FALSE(medial_matching(looped).matching.has_value());
  CircularPlanarGraph island(2, 1, {{0, 1}}, {{0}, {1}, {}});
  CHECK(medial_matching(island).matching == Matching(2, {2, 3, 0, 1}));
  CircularPlanarGraph ring(1, 2, {{1, 2}, {2, 1}}, {{}, {0, 3}, {1, 2}});
  auto closed = medial_matching(ring);
  CHECK_FALSE(closed.matching.has_value());
}

TEST_CASE("recovery") {
  CHECK(recover_graph(Matching::hugging(4)) == CircularPlanarGraph::empty(4));
  auto one = recover_graph(Matching(2, {2, 3, 0, 1}));
  CHECK(one.edge_count() == 1);
  CHECK(pi_set(one) == pi_set(single_edge()));
  auto top3 = recover_graph(Matching::antipodal(3));
  CHECK(top3.edge_count() == 3);
  CHECK(pi_set(top3).size() == 3);
  CHECK_THROWS_AS(recover_graph(Matching(2, {3, 2, 1, 0})), PreconditionError);

  for (int n = 1; n <= 5; ++n)
    for (const auto& m : enumerate_full(n)) {
      auto g = recover_graph(m);
      CHECK(g.edge_count() == static_cast<std::size_t>(crossing_count(m)));
      CHECK(medial_matching(g).matching == m);
      if (n <= 4) CHECK(is_critical(g));
    }
}

TEST_CASE("connection sets separate the classes of EP_4") {
  std::set<ConnectionSet> seen;
  for (const auto& m : enumerate_full(4)) seen.insert(pi_set(recover_graph(m)));
  CHECK(seen.size() == 52);
}

TEST_CASE("covers come from single contractions or deletions") {
  for (int n = 2; n <= 4; ++n) {
    auto p = build_ep(n);
    for (std::size_t y = 0; y < p.order.size(); ++y) {
      auto gy = recover_graph(p.elements[y]);
      for (auto x : p.order.covers_below(y)) {
        auto target = pi_set(recover_graph(p.elements[x]));
        bool found = false;
        for (std::size_t e = 0; e < gy.edge_count() && !found; ++e) {
          found = pi_set(delete_edge(gy, static_cast<int>(e))) == target;
          const auto& [u, v] = gy.edges()[e];
          if (!found && !(gy.is_boundary(u) && gy.is_boundary(v)))
            found = pi_set(contract_edge(gy, static_cast<int>(e))) == target;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("closure limits") {
  auto edge = closure_limit_check(unit_network(single_edge()), 0);
  CHECK(edge.deletion_exact);
  CHECK_FALSE(edge.contraction_checked);
  CHECK(edge.pass);

  auto spoke = closure_limit_check(unit_network(y_graph()), 2);
  CHECK(spoke.deletion_exact);
  CHECK(spoke.contraction_checked);
  REQUIRE(spoke.gaps.size() == 3);
  CHECK(spoke.gaps_decreasing);
  CHECK(spoke.final_gap_small);
  CHECK(spoke.pass);

  auto tri = closure_limit_check(unit_network(triangle()), 1);
  CHECK(tri.deletion_exact);
  CHECK(tri.pass);

  for (int n = 2; n <= 4; ++n)
    for (const auto& m : enumerate_full(n)) {
      auto net = unit_network(recover_graph(m));
      for (std::size_t e = 0; e < net.graph.edge_count(); ++e) CHECK(closure_limit_check(net, static_cast<int>(e)).pass);
    }
}
