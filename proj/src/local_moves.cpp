#include "electra/network.hpp"

#include "graph_draft.hpp"

#include <algorithm>

namespace electra {

using detail::Draft;

namespace {

void check_edge(const CircularPlanarGraph& g, int e) {
  if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count())
    throw std::out_of_range("edge " + std::to_string(e) + " does not exist");
}

void check_interior(const CircularPlanarGraph& g, int v, const char* what) {
  if (v < g.n() || v >= g.vertex_count())
    throw TransformationError(std::string(what) + ": vertex " + std::to_string(v) + " is not an interior vertex");
}

// Dart pointing from the hub-like vertex along edge e.
int dart_at(const Draft& d, int e, int vertex) { return d.edges[static_cast<std::size_t>(e)].u == vertex ? 2 * e : 2 * e + 1; }

void contract_in_draft(Draft& d, int e) {
  const auto [u, v] = d.edges[static_cast<std::size_t>(e)];
  if (u == v) throw IllegalMoveError("a self-loop cannot be contracted");
  if (u < d.n && v < d.n) throw IllegalMoveError("an edge between two boundary vertices cannot be contracted");
  int keep = u, gone = v;
  if (v < d.n || (u >= d.n && v < u)) std::swap(keep, gone);
  const int dk = dart_at(d, e, keep), dg = dart_at(d, e, gone);

  // the merged vertex sees gone's darts, starting clockwise after dg, in place of dk
  auto gone_list = d.rotation[static_cast<std::size_t>(gone)];
  auto start = std::find(gone_list.begin(), gone_list.end(), dg);
  std::vector<int> inserted(start + 1, gone_list.end());
  inserted.insert(inserted.end(), gone_list.begin(), start);

  auto& keep_list = d.rotation[static_cast<std::size_t>(keep)];
  auto at = std::find(keep_list.begin(), keep_list.end(), dk);
  at = keep_list.erase(at);
  keep_list.insert(at, inserted.begin(), inserted.end());

  for (auto& edge : d.edges) {
    if (edge.u == gone) edge.u = keep;
    if (edge.v == gone) edge.v = keep;
  }
  d.edge_alive[static_cast<std::size_t>(e)] = false;
  d.rotation[static_cast<std::size_t>(gone)].clear();
  d.vertex_alive[static_cast<std::size_t>(gone)] = false;
}

}  // namespace

CircularPlanarGraph delete_edge(const CircularPlanarGraph& g, int e) {
  check_edge(g, e);
  Draft d(g);
  d.kill_edge(e);
  return d.finish();
}

Network delete_edge(const Network& net, int e) {
  check_edge(net.graph, e);
  Draft d(net);
  d.kill_edge(e);
  return d.finish_network();
}

CircularPlanarGraph contract_edge(const CircularPlanarGraph& g, int e) {
  check_edge(g, e);
  Draft d(g);
  contract_in_draft(d, e);
  return d.finish();
}

Network contract_edge(const Network& net, int e) {
  check_edge(net.graph, e);
  Draft d(net);
  contract_in_draft(d, e);
  return d.finish_network();
}

Network y_delta(const Network& net, int hub) {
  const auto& g = net.graph;
  check_interior(g, hub, "y_delta");
  const auto& spokes = g.rotation(hub);
  if (spokes.size() != 3) throw TransformationError("y_delta: hub " + std::to_string(hub) + " does not have degree 3");
  int v[3];
  Rational c[3];
  for (int i = 0; i < 3; ++i) {
    int d = spokes[static_cast<std::size_t>(i)];
    v[i] = g.head(d);
    c[i] = net.conductance[static_cast<std::size_t>(CircularPlanarGraph::edge_of(d))];
    if (v[i] == hub) throw TransformationError("y_delta: hub carries a self-loop");
  }
  if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) throw TransformationError("y_delta: hub has a multiple edge");

  Draft d(net);
  const Rational sum = c[0] + c[1] + c[2];
  int tri[3];  // tri[i] joins v[i] and v[i+1]
  for (int i = 0; i < 3; ++i) tri[i] = d.add_edge(v[i], v[(i + 1) % 3], c[i] * c[(i + 1) % 3] / sum);
  for (int i = 0; i < 3; ++i) {
    // at v_i the spoke becomes [edge to v_(i+1), edge to v_(i-1)]
    int spoke = CircularPlanarGraph::twin(spokes[static_cast<std::size_t>(i)]);
    int to_next = 2 * tri[i];                  // tri[i] has u = v_i
    int to_prev = 2 * tri[(i + 2) % 3] + 1;    // tri[i-1] has v = v_i
    auto& list = d.rotation[static_cast<std::size_t>(v[i])];
    auto at = std::find(list.begin(), list.end(), spoke);
    *at = to_prev;
    list.insert(at, to_next);
  }
  for (int i = 0; i < 3; ++i) d.kill_edge(CircularPlanarGraph::edge_of(spokes[static_cast<std::size_t>(i)]));
  d.vertex_alive[static_cast<std::size_t>(hub)] = false;
  return d.finish_network();
}

Network delta_y(const Network& net, int a, int b, int c) {
  const auto& g = net.graph;
  const int vs[3] = {a, b, c};
  for (int x : vs)
    if (x < 0 || x >= g.vertex_count()) throw TransformationError("delta_y: vertex out of range");
  if (a == b || b == c || a == c) throw TransformationError("delta_y: vertices must be distinct");

  auto single_edge = [&](int x, int y) {
    int found = -1, count = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edges()[e];
      if ((ed.u == x && ed.v == y) || (ed.u == y && ed.v == x)) {
        found = static_cast<int>(e);
        ++count;
      }
    }
    if (count != 1)
      throw TransformationError("delta_y: vertices " + std::to_string(x) + " and " + std::to_string(y) +
                                " are not joined by exactly one edge");
    return found;
  };
  auto dart_from = [&](int e, int x) { return g.edges()[static_cast<std::size_t>(e)].u == x ? 2 * e : 2 * e + 1; };

  // the triangle must bound a face: at each corner the two triangle darts are
  // clockwise-consecutive, and they must all wind the same way
  const int eab = single_edge(a, b), ebc = single_edge(b, c), eca = single_edge(c, a);
  auto consecutive = [&](int x, int y) { return g.cw_next(x) == std::optional<int>(y); };
  int order[3];
  if (consecutive(dart_from(eab, a), dart_from(eca, a)) && consecutive(dart_from(ebc, b), dart_from(eab, b)) &&
      consecutive(dart_from(eca, c), dart_from(ebc, c))) {
    order[0] = a, order[1] = b, order[2] = c;
  } else if (consecutive(dart_from(eca, a), dart_from(eab, a)) && consecutive(dart_from(eab, b), dart_from(ebc, b)) &&
             consecutive(dart_from(ebc, c), dart_from(eca, c))) {
    order[0] = a, order[1] = c, order[2] = b;
  } else {
    throw TransformationError("delta_y: the triangle does not bound a face");
  }

  auto edge_between = [&](int x, int y) {
    if ((x == a && y == b) || (x == b && y == a)) return eab;
    if ((x == b && y == c) || (x == c && y == b)) return ebc;
    return eca;
  };
  const Rational& x = net.conductance[static_cast<std::size_t>(eab)];
  const Rational& y = net.conductance[static_cast<std::size_t>(ebc)];
  const Rational& z = net.conductance[static_cast<std::size_t>(eca)];
  const Rational products = x * y + y * z + z * x;

  Draft d(net);
  const int hub = d.add_vertex();
  int spoke_dart[3];
  for (int i = 0; i < 3; ++i) {
    int vi = order[i];
    int spoke = d.add_edge(hub, vi, products / net.conductance[static_cast<std::size_t>(edge_between(order[(i + 1) % 3], order[(i + 2) % 3]))]);
    spoke_dart[i] = 2 * spoke;
    int to_next = dart_from(edge_between(vi, order[(i + 1) % 3]), vi);
    auto& list = d.rotation[static_cast<std::size_t>(vi)];
    auto at = std::find(list.begin(), list.end(), to_next);
    *at = 2 * spoke + 1;
  }
  for (int e : {eab, ebc, eca}) d.kill_edge(e);
  d.rotation[static_cast<std::size_t>(hub)] = {spoke_dart[0], spoke_dart[1], spoke_dart[2]};

  // spokes were appended in clockwise hub order; the documented order is a, b, c
  auto out = d.finish_network();
  if (order[1] == c) {
    // hub order a, c, b: swap the last two spokes so edge indices follow a, b, c
    Draft fix(out);
    const int m = static_cast<int>(fix.edges.size());
    std::swap(fix.edges[static_cast<std::size_t>(m - 2)], fix.edges[static_cast<std::size_t>(m - 1)]);
    std::swap(fix.conductance[static_cast<std::size_t>(m - 2)], fix.conductance[static_cast<std::size_t>(m - 1)]);
    for (auto& list : fix.rotation)
      for (auto& dart : list) {
        if (dart / 2 == m - 2)
          dart = 2 * (m - 1) + dart % 2;
        else if (dart / 2 == m - 1)
          dart = 2 * (m - 2) + dart % 2;
      }
    out = fix.finish_network();
  }
  return out;
}

Network reduce(const Network& net, Reduction rule, int site) {
  const auto& g = net.graph;
  Draft d(net);
  switch (rule) {
    case Reduction::self_loop: {
      check_edge(g, site);
      const auto& e = g.edges()[static_cast<std::size_t>(site)];
      if (e.u != e.v) throw TransformationError("self_loop: edge " + std::to_string(site) + " is not a loop");
      d.kill_edge(site);
      break;
    }
    case Reduction::spike: {
      check_interior(g, site, "spike");
      if (g.degree(site) != 1) throw TransformationError("spike: vertex " + std::to_string(site) + " does not have degree 1");
      d.kill_edge(CircularPlanarGraph::edge_of(g.rotation(site)[0]));
      d.vertex_alive[static_cast<std::size_t>(site)] = false;
      break;
    }
    case Reduction::parallel: {
      check_edge(g, site);
      const int d0 = 2 * site;
      const auto& e = g.edges()[static_cast<std::size_t>(site)];
      if (e.u == e.v) throw TransformationError("parallel: edge " + std::to_string(site) + " is a loop");
      // the twin edge must sit next to `site` at both ends, enclosing an empty face
      int partner = -1;
      for (auto cand : {g.cw_next(d0), g.ccw_prev(d0)}) {
        if (!cand || g.head(*cand) != e.v) continue;
        int f = CircularPlanarGraph::edge_of(*cand);
        if (f == site) continue;
        int far = *cand == 2 * f ? 2 * f + 1 : 2 * f;
        int mine = d0 + 1;
        bool cw = *cand == g.cw_next(d0);
        // a face between them: clockwise at u means counterclockwise at v
        if ((cw && g.ccw_prev(mine) == far) || (!cw && g.cw_next(mine) == far)) {
          partner = f;
          break;
        }
      }
      if (partner < 0) throw TransformationError("parallel: edge " + std::to_string(site) + " has no parallel neighbour");
      d.conductance[static_cast<std::size_t>(site)] += d.conductance[static_cast<std::size_t>(partner)];
      d.kill_edge(partner);
      break;
    }
    case Reduction::series: {
      check_interior(g, site, "series");
      if (g.degree(site) != 2) throw TransformationError("series: vertex " + std::to_string(site) + " does not have degree 2");
      const int s0 = g.rotation(site)[0], s1 = g.rotation(site)[1];
      const int e0 = CircularPlanarGraph::edge_of(s0), e1 = CircularPlanarGraph::edge_of(s1);
      if (e0 == e1) throw TransformationError("series: vertex carries a self-loop");
      const int x = g.head(s0), y = g.head(s1);
      const Rational& a = net.conductance[static_cast<std::size_t>(e0)];
      const Rational& b = net.conductance[static_cast<std::size_t>(e1)];
      const int merged = d.add_edge(x, y, 1 / (1 / a + 1 / b));
      // the new edge takes over the far darts of the two old edges
      auto replace = [&](int old_dart, int new_dart) {
        auto& list = d.rotation[static_cast<std::size_t>(d.tail(old_dart))];
        *std::find(list.begin(), list.end(), old_dart) = new_dart;
      };
      replace(CircularPlanarGraph::twin(s0), 2 * merged);
      replace(CircularPlanarGraph::twin(s1), 2 * merged + 1);
      d.edge_alive[static_cast<std::size_t>(e0)] = false;
      d.edge_alive[static_cast<std::size_t>(e1)] = false;
      d.rotation[static_cast<std::size_t>(site)].clear();
      d.vertex_alive[static_cast<std::size_t>(site)] = false;
      break;
    }
  }
  return d.finish_network();
}

}  // namespace electra
