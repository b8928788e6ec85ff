#include "electra/network.hpp"

#include "graph_draft.hpp"

#include <algorithm>
#include <numeric>

namespace electra {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

}  // namespace

CircularPlanarGraph::CircularPlanarGraph(int n, int interior, std::vector<Edge> edges,
                                         std::vector<std::vector<int>> rotation)
    : n_(n), interior_(interior), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (n < 1) throw EmbeddingError("a circular planar graph needs at least one boundary vertex");
  if (interior < 0) throw EmbeddingError("negative interior vertex count");
  const int vcount = n + interior;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& [u, v] = edges_[e];
    if (u < 0 || u >= vcount || v < 0 || v >= vcount)
      throw EmbeddingError("edge " + std::to_string(e) + " has an endpoint out of range");
  }
  if (rotation_.size() != static_cast<std::size_t>(vcount))
    throw EmbeddingError("rotation system must list every vertex");

  const std::size_t darts = 2 * edges_.size();
  position_.assign(darts, darts);
  for (int w = 0; w < vcount; ++w) {
    const auto& list = rotation_[static_cast<std::size_t>(w)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      int d = list[i];
      if (d < 0 || static_cast<std::size_t>(d) >= darts)
        throw EmbeddingError("rotation at vertex " + std::to_string(w) + " names a missing dart");
      if (position_[static_cast<std::size_t>(d)] != darts)
        throw EmbeddingError("dart " + std::to_string(d) + " appears twice in the rotation system");
      if (tail(d) != w)
        throw EmbeddingError("dart " + std::to_string(d) + " is listed at vertex " + std::to_string(w) +
                             " but belongs to vertex " + std::to_string(tail(d)));
      position_[static_cast<std::size_t>(d)] = i;
    }
  }
  for (std::size_t d = 0; d < darts; ++d)
    if (position_[d] == darts) throw EmbeddingError("dart " + std::to_string(d) + " is missing from the rotation system");

  // Euler: V - E + F = 2C over the graph with the circle arcs added, where
  // an isolated vertex counts as one face of its own.
  std::vector<int> parent(static_cast<std::size_t>(vcount));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [u, v] : edges_) parent[static_cast<std::size_t>(find_root(parent, u))] = find_root(parent, v);
  for (int i = 1; i < n; ++i) parent[static_cast<std::size_t>(find_root(parent, i))] = find_root(parent, 0);
  long components = 0, isolated = 0;
  for (int w = 0; w < vcount; ++w) {
    if (find_root(parent, w) == w) ++components;
    if (w >= n && rotation_[static_cast<std::size_t>(w)].empty()) ++isolated;
  }
  const long euler = vcount - static_cast<long>(edges_.size() + static_cast<std::size_t>(n)) +
                     static_cast<long>(face_count()) + isolated;
  if (euler != 2 * components)
    throw EmbeddingError("rotation system is not a disk embedding (V - E + F = " + std::to_string(euler) + ", expected " +
                         std::to_string(2 * components) + ")");
}

CircularPlanarGraph CircularPlanarGraph::empty(int n) {
  return CircularPlanarGraph(n, 0, {}, std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
}

int CircularPlanarGraph::tail(int dart) const {
  const auto& e = edges_.at(static_cast<std::size_t>(edge_of(dart)));
  return dart % 2 == 0 ? e.u : e.v;
}

std::optional<int> CircularPlanarGraph::cw_next(int dart) const {
  const auto& list = rotation(tail(dart));
  std::size_t i = position_[static_cast<std::size_t>(dart)] + 1;
  if (i == list.size()) {
    if (is_boundary(tail(dart))) return std::nullopt;
    i = 0;
  }
  return list[i];
}

std::optional<int> CircularPlanarGraph::ccw_prev(int dart) const {
  const auto& list = rotation(tail(dart));
  std::size_t i = position_[static_cast<std::size_t>(dart)];
  if (i == 0) {
    if (is_boundary(tail(dart))) return std::nullopt;
    i = list.size();
  }
  return list[i - 1];
}

std::size_t CircularPlanarGraph::face_count() const {
  // Augmented darts: graph darts, then arc i from V_i to V_(i+1) as darts
  // A + 2i (at V_i) and A + 2i + 1 (at V_(i+1)).
  const int arc_base = static_cast<int>(2 * edges_.size());
  const auto total = static_cast<std::size_t>(arc_base + 2 * n_);
  std::vector<int> at(total);
  std::vector<std::size_t> pos(total);
  std::vector<std::vector<int>> lists(rotation_.size());
  for (int w = 0; w < vertex_count(); ++w) {
    auto& list = lists[static_cast<std::size_t>(w)];
    if (w < n_) list.push_back(arc_base + 2 * w);
    for (int d : rotation_[static_cast<std::size_t>(w)]) list.push_back(d);
    if (w < n_) list.push_back(arc_base + 2 * ((w + n_ - 1) % n_) + 1);
    for (std::size_t i = 0; i < list.size(); ++i) {
      at[static_cast<std::size_t>(list[i])] = w;
      pos[static_cast<std::size_t>(list[i])] = i;
    }
  }
  std::vector<bool> seen(total, false);
  std::size_t faces = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++faces;
    std::size_t d = start;
    while (!seen[d]) {
      seen[d] = true;
      // next dart: counterclockwise neighbour of the twin at the far end
      auto t = static_cast<std::size_t>(static_cast<int>(d) ^ 1);
      const auto& list = lists[static_cast<std::size_t>(at[t])];
      std::size_t i = pos[t] == 0 ? list.size() - 1 : pos[t] - 1;
      d = static_cast<std::size_t>(list[i]);
    }
  }
  return faces;
}

Network::Network(CircularPlanarGraph g, std::vector<Rational> c) : graph(std::move(g)), conductance(std::move(c)) {
  if (conductance.size() != graph.edge_count())
    throw std::invalid_argument("network needs exactly one conductance per edge");
  for (std::size_t e = 0; e < conductance.size(); ++e)
    if (conductance[e] <= 0) throw std::invalid_argument("conductance of edge " + std::to_string(e) + " is not positive");
}

Network unit_network(const CircularPlanarGraph& g) {
  return Network(g, std::vector<Rational>(g.edge_count(), Rational(1)));
}

namespace detail {

Draft::Draft(const CircularPlanarGraph& g)
    : n(g.n()),
      vertex_alive(static_cast<std::size_t>(g.vertex_count()), true),
      edges(g.edges()),
      edge_alive(g.edge_count(), true),
      conductance(g.edge_count(), Rational(1)),
      rotation(g.rotation()) {}

Draft::Draft(const Network& net) : Draft(net.graph) { conductance = net.conductance; }

int Draft::add_vertex() {
  vertex_alive.push_back(true);
  rotation.emplace_back();
  return static_cast<int>(vertex_alive.size()) - 1;
}

int Draft::add_edge(int u, int v, const Rational& c) {
  edges.push_back({u, v});
  edge_alive.push_back(true);
  conductance.push_back(c);
  return static_cast<int>(edges.size()) - 1;
}

void Draft::kill_edge(int e) {
  edge_alive[static_cast<std::size_t>(e)] = false;
  for (int d : {2 * e, 2 * e + 1}) {
    auto& list = rotation[static_cast<std::size_t>(tail(d))];
    list.erase(std::remove(list.begin(), list.end(), d), list.end());
  }
}

std::size_t Draft::position(int vertex, int dart) const {
  const auto& list = rotation[static_cast<std::size_t>(vertex)];
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), dart) - list.begin());
}

CircularPlanarGraph Draft::finish(std::vector<Rational>* conductance_out) const {
  std::vector<int> vmap(vertex_alive.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < vertex_alive.size(); ++v)
    if (vertex_alive[v]) vmap[v] = next++;
  std::vector<int> emap(edges.size(), -1);
  std::vector<Edge> out_edges;
  std::vector<Rational> out_c;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edge_alive[e]) continue;
    int u = vmap[static_cast<std::size_t>(edges[e].u)], v = vmap[static_cast<std::size_t>(edges[e].v)];
    if (u < 0 || v < 0) throw std::logic_error("draft edge touches a removed vertex");
    emap[e] = static_cast<int>(out_edges.size());
    out_edges.push_back({u, v});
    out_c.push_back(conductance[e]);
  }
  std::vector<std::vector<int>> out_rot(static_cast<std::size_t>(next));
  for (std::size_t v = 0; v < vertex_alive.size(); ++v) {
    if (!vertex_alive[v]) continue;
    for (int d : rotation[v]) out_rot[static_cast<std::size_t>(vmap[v])].push_back(2 * emap[static_cast<std::size_t>(d / 2)] + d % 2);
  }
  if (conductance_out) *conductance_out = std::move(out_c);
  return CircularPlanarGraph(n, next - n, std::move(out_edges), std::move(out_rot));
}

Network Draft::finish_network() const {
  std::vector<Rational> c;
  auto g = finish(&c);
  return Network(std::move(g), std::move(c));
}

}  // namespace detail

}  // namespace electra
