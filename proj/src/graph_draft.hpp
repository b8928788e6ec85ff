#pragma once

#include "electra/network.hpp"

#include <vector>

namespace electra::detail {

// Mutable copy of a graph for local surgery; finish() drops dead vertices
// and edges and renumbers everything in order.
struct Draft {
  int n = 0;
  std::vector<bool> vertex_alive;
  std::vector<Edge> edges;
  std::vector<bool> edge_alive;
  std::vector<Rational> conductance;
  std::vector<std::vector<int>> rotation;

  explicit Draft(const CircularPlanarGraph& g);
  Draft(const Network& net);

  int add_vertex();
  int add_edge(int u, int v, const Rational& c = 1);
  int tail(int dart) const { return dart % 2 == 0 ? edges[dart / 2].u : edges[dart / 2].v; }
  void kill_edge(int e);  // also removes both darts from the rotation lists
  std::size_t position(int vertex, int dart) const;
  std::vector<int> live_darts(int vertex) const { return rotation[static_cast<std::size_t>(vertex)]; }

  CircularPlanarGraph finish(std::vector<Rational>* conductance_out = nullptr) const;
  Network finish_network() const;
};

}  // namespace electra::detail
