#include "electra/io.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>

namespace electra {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return to_string(z);
}

Json rational_json(const Rational& r) { return to_string(r); }

Json polynomial_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(integer_json(c));
  return arr;
}

Json matching_json(const Matching& m) { return Json{{"n", m.n()}, {"partner", m.partners()}}; }

Matching matching_from_json(const Json& j) {
  try {
    return Matching(j.at("n").get<int>(), j.at("partner").get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw FormatError(std::string("matching JSON: ") + e.what());
  }
}

Json network_json(const Network& net) {
  const auto& g = net.graph;
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    edges.push_back({{"u", g.edges()[e].u}, {"v", g.edges()[e].v}, {"c", to_string(net.conductance[e])}});
  Json rotation = Json::object();
  for (int w = 0; w < g.vertex_count(); ++w) {
    Json list = Json::array();
    for (int d : g.rotation(w)) list.push_back(CircularPlanarGraph::edge_of(d));
    rotation[std::to_string(w)] = list;
  }
  return Json{{"n", g.n()}, {"interior", g.interior()}, {"edges", edges}, {"rotation", rotation}};
}

Network network_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int interior = j.value("interior", 0);
    std::vector<Edge> edges;
    std::vector<Rational> conductance;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at("u").get<int>(), e.at("v").get<int>()});
      conductance.push_back(e.contains("c") ? parse_rational(e.at("c").get<std::string>()) : Rational(1));
    }
    const int vcount = n + interior;
    std::vector<std::vector<int>> rotation(static_cast<std::size_t>(std::max(vcount, 0)));
    const auto& rot = j.at("rotation");
    for (auto it = rot.begin(); it != rot.end(); ++it) {
      std::size_t used = 0;
      const int w = std::stoi(it.key(), &used);
      if (used != it.key().size() || w < 0 || w >= vcount)
        throw FormatError("network JSON: rotation key '" + it.key() + "' is not a vertex");
      std::vector<bool> seen_u(edges.size(), false);
      for (const auto& x : it.value()) {
        const int e = x.get<int>();
        if (e < 0 || static_cast<std::size_t>(e) >= edges.size())
          throw FormatError("network JSON: rotation of vertex " + it.key() + " names missing edge " + std::to_string(e));
        const auto& [u, v] = edges[static_cast<std::size_t>(e)];
        int dart;
        if (u == w && (v != w || !seen_u[static_cast<std::size_t>(e)])) {
          dart = 2 * e;
          seen_u[static_cast<std::size_t>(e)] = true;
        } else if (v == w) {
          dart = 2 * e + 1;
        } else {
          throw FormatError("network JSON: edge " + std::to_string(e) + " is not incident to vertex " + it.key());
        }
        rotation[static_cast<std::size_t>(w)].push_back(dart);
      }
    }
    return Network(CircularPlanarGraph(n, interior, std::move(edges), std::move(rotation)), std::move(conductance));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("network JSON: ") + e.what());
  }
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json pair_json(const CircularPair& c) {
  auto one_based = [](const std::vector<int>& xs) {
    std::vector<int> out;
    for (int x : xs) out.push_back(x + 1);
    return out;
  };
  return Json{{"label", to_string(c)}, {"p", one_based(c.p)}, {"q", one_based(c.q)}};
}

std::string graph_dot(const CircularPlanarGraph& g, const std::string& name) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "graph " << name << " {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
  const double pi = std::acos(-1.0);
  for (int i = 0; i < g.n(); ++i) {
    // clockwise from the top
    double angle = pi / 2 - 2 * pi * i / g.n();
    // avoid printing -0.000
    auto coord = [](double x) { return std::abs(x) < 5e-4 ? 0.0 : x; };
    out << "  v" << i << " [label=\"V" << i + 1 << "\", pos=\"" << coord(3 * std::cos(angle)) << ',' << coord(3 * std::sin(angle))
        << "!\", style=filled, fillcolor=lightgray];\n";
  }
  for (int w = g.n(); w < g.vertex_count(); ++w) out << "  v" << w << " [label=\"" << w << "\"];\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    out << "  v" << g.edges()[e].u << " -- v" << g.edges()[e].v << " [label=\"e" << e << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace electra
