#include "electra/io.hpp"

#include "fixtures/networks.hpp"

#include <doctest.h>

#include <fstream>

using namespace electra;
using namespace fixtures;

TEST_CASE("scalars") {
  CHECK(integer_json(Integer(464)) == Json(464));
  CHECK(integer_json(Integer("123456789012345678901234567890", 10)) == Json("123456789012345678901234567890"));
  CHECK(rational_json(rational(-6, 4)) == Json("-3/2"));
  CHECK(rational_json(Rational(7)) == Json("7"));
  CHECK(polynomial_json(IntPolynomial{1, 3, 3, 1}).dump() == "[1,3,3,1]");
  CHECK(polynomial_json(IntPolynomial{}).dump() == "[]");
}

TEST_CASE("matchings") {
  auto m = Matching::antipodal(3);
  CHECK(matching_json(m).dump() == R"({"n":3,"partner":[3,4,5,0,1,2]})");
  CHECK(matching_from_json(matching_json(m)) == m);
  CHECK_THROWS_AS(matching_from_json(Json::parse(R"({"n":2})")), FormatError);
  CHECK_THROWS_AS(matching_from_json(Json::parse(R"({"n":2,"partner":[0,1,2,3]})")), std::invalid_argument);
}

TEST_CASE("network round trip") {
  for (const auto& g : {single_edge(), y_graph(), triangle(), triangle_doubled(), CircularPlanarGraph::empty(3)}) {
    auto net = unit_network(g);
    CHECK(network_from_json(network_json(net)).graph == g);
  }
  for (int n = 2; n <= 5; ++n)
    for (const auto& m : enumerate_full(n)) {
      auto g = recover_graph(m);
      CHECK(network_from_json(network_json(unit_network(g))).graph == g);
    }
  auto weighted = with_conductances(y_graph(), {rational(1, 2), 2, 3});
  auto back = network_from_json(network_json(weighted));
  CHECK(back.conductance == weighted.conductance);
}

TEST_CASE("self-loops read back as an embedding") {
  CircularPlanarGraph looped(2, 0, {{0, 1}, {0, 0}}, {{0, 2, 3}, {1}});
  auto back = network_from_json(network_json(unit_network(looped)));
  CHECK(back.graph.rotation(0) == std::vector<int>{0, 2, 3});
}

TEST_CASE("the Y example file") {
  std::ifstream in(std::string(ELECTRA_SOURCE_DIR) + "/data/y111.json");
  REQUIRE(in);
  auto net = network_from_json(Json::parse(in));
  CHECK(net.graph == y_graph());
  CHECK(matrix_json(response_matrix(net)).dump() ==
        R"([["-2/3","1/3","1/3"],["1/3","-2/3","1/3"],["1/3","1/3","-2/3"]])");
}

TEST_CASE("malformed networks") {
  auto bad = [](const char* text) { return network_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"n":2,"edges":[{"u":0,"v":1}],"rotation":{"0":[0],"5":[0]}})"), FormatError);
  CHECK_THROWS_AS(bad(R"({"n":2,"edges":[{"u":0,"v":1}],"rotation":{"0":[3]}})"), FormatError);
  CHECK_THROWS_AS(bad(R"({"n":3,"edges":[{"u":0,"v":1}],"rotation":{"0":[0],"2":[0]}})"), FormatError);
  CHECK_THROWS_AS(bad(R"({"n":2,"edges":[{"u":0,"v":1,"c":"0"}],"rotation":{"0":[0],"1":[0]}})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"n":2,"edges":[{"u":0,"v":1}],"rotation":{"0":[0]}})"), EmbeddingError);
  CHECK(bad(R"({"n":2,"edges":[{"u":0,"v":1}],"rotation":{"0":[0],"1":[0]}})").conductance[0] == 1);
}

TEST_CASE("dot drawing") {
  auto dot = graph_dot(y_graph());
  CHECK(dot.find("v0 [label=\"V1\", pos=\"0.000,3.000!\"") != std::string::npos);
  CHECK(dot.find("v3 -- v2 [label=\"e2\"]") != std::string::npos);
  CHECK(graph_dot(y_graph()) == dot);
}
