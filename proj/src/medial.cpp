#include "electra/network.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

namespace electra {

// ---------------------------------------------------------------------------
// Geodesic tracing

namespace {

// A corner joins two consecutive darts at a vertex (or a dart and a medial
// boundary point). Ends >= 0 are darts; ends < 0 encode point p as -(p + 1).
struct Corner {
  int first, second;  // clockwise order at the vertex
};

int point_end(int p) { return -(p + 1); }

}  // namespace

MedialResult medial_matching(const CircularPlanarGraph& g) {
  const int n = g.n();
  std::vector<Corner> corners;
  const auto darts = 2 * g.edge_count();
  std::vector<int> before(darts, -1), after(darts, -1);
  std::vector<int> corner_of_point(static_cast<std::size_t>(2 * n), -1);

  auto add_corner = [&](int x, int y) {
    const int id = static_cast<int>(corners.size());
    corners.push_back({x, y});
    if (x >= 0) after[static_cast<std::size_t>(x)] = id;
    else corner_of_point[static_cast<std::size_t>(-x - 1)] = id;
    if (y >= 0) before[static_cast<std::size_t>(y)] = id;
    else corner_of_point[static_cast<std::size_t>(-y - 1)] = id;
  };
  for (int w = 0; w < g.vertex_count(); ++w) {
    const auto& list = g.rotation(w);
    const std::size_t k = list.size();
    if (g.is_boundary(w)) {
      // B_w side first, A_w side last
      int prev = point_end(2 * w + 1);
      for (int d : list) {
        add_corner(prev, d);
        prev = d;
      }
      add_corner(prev, point_end(2 * w));
    } else {
      for (std::size_t j = 0; j < k; ++j) add_corner(list[j], list[(j + 1) % k]);
    }
  }

  std::vector<bool> used(corners.size(), false);
  std::vector<std::vector<int>> passes(g.edge_count());  // geodesic ids through each edge
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::vector<int> geodesic_start;

  // Walk from corner c entering at `from`; returns the far boundary point or -1 on a cycle.
  auto walk = [&](int c, int from, int id) {
    while (true) {
      used[static_cast<std::size_t>(c)] = true;
      const auto& cr = corners[static_cast<std::size_t>(c)];
      const bool forward = from == cr.first;
      const int out = forward ? cr.second : cr.first;
      if (out < 0) return -out - 1;
      const int e = CircularPlanarGraph::edge_of(out);
      passes[static_cast<std::size_t>(e)].push_back(id);
      // straight through the medial vertex: before pairs with before, after with after
      const int far = CircularPlanarGraph::twin(out);
      const int next = forward ? before[static_cast<std::size_t>(far)] : after[static_cast<std::size_t>(far)];
      // entering via `out`'s before-corner (forward) means leaving via far's before-corner
      if (used[static_cast<std::size_t>(next)]) return -1;
      c = next;
      from = far;
    }
  };

  for (int p = 0; p < 2 * n; ++p) {
    if (partner[static_cast<std::size_t>(p)] != -1) continue;
    const int id = static_cast<int>(geodesic_start.size());
    geodesic_start.push_back(p);
    const int q = walk(corner_of_point[static_cast<std::size_t>(p)], point_end(p), id);
    if (q < 0) return {std::nullopt, "geodesic from " + point_name(p) + " runs into a visited corner"};
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
  }
  for (std::size_t c = 0; c < corners.size(); ++c)
    if (!used[c]) {
      int d = corners[c].first >= 0 ? corners[c].first : corners[c].second;
      return {std::nullopt, "closed geodesic through edge " + std::to_string(CircularPlanarGraph::edge_of(d))};
    }

  std::map<std::pair<int, int>, std::vector<int>> shared;
  for (std::size_t e = 0; e < passes.size(); ++e) {
    const auto& ps = passes[e];
    if (ps.size() != 2) return {std::nullopt, "edge " + std::to_string(e) + " is not crossed by exactly two geodesic strands"};
    if (ps[0] == ps[1])
      return {std::nullopt, "geodesic from " + point_name(geodesic_start[static_cast<std::size_t>(ps[0])]) +
                                " crosses itself at edge " + std::to_string(e)};
    shared[std::minmax(ps[0], ps[1])].push_back(static_cast<int>(e));
  }
  for (const auto& [pair, es] : shared)
    if (es.size() > 1)
      return {std::nullopt, "geodesics from " + point_name(geodesic_start[static_cast<std::size_t>(pair.first)]) + " and " +
                                point_name(geodesic_start[static_cast<std::size_t>(pair.second)]) + " cross " +
                                std::to_string(es.size()) + " times (a lens)"};
  return {Matching(n, partner), ""};
}

// ---------------------------------------------------------------------------
// Geometric recovery

namespace {

struct Point {
  Rational x, y;
};

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Point minus(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// Rational point on the unit circle at half-angle tangent t.
Point circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

struct Arrangement {
  // half-edge h: origin node, twin h ^ 1
  std::vector<int> origin;
  std::vector<std::vector<int>> ccw;  // outgoing half-edges per node, counterclockwise
  std::vector<std::size_t> slot;      // index of each half-edge in ccw[origin]
  int add_segment(int a, int b) {
    origin.push_back(a);
    origin.push_back(b);
    return static_cast<int>(origin.size()) - 2;
  }
  int next_in_face(int h) const {
    const int t = h ^ 1;
    const auto& list = ccw[static_cast<std::size_t>(origin[static_cast<std::size_t>(t)])];
    return list[(slot[static_cast<std::size_t>(t)] + 1) % list.size()];
  }
};

struct CrossingInfo {
  int chord_i, chord_j;
  Rational s_i, s_j;  // parameters along each chord
};

}  // namespace

CircularPlanarGraph recover_graph(const Matching& m) {
  if (auto line = first_dividing_line(m))
    throw PreconditionError("recover_graph needs a full matching; dividing line V" + std::to_string(line->first) + "V" +
                            std::to_string(line->second));
  const int n = m.n(), points = 2 * n;
  const auto wires = m.wires();
  const auto chords = wires.size();

  std::vector<Rational> t(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) t[static_cast<std::size_t>(k)] = Rational(n - k) + rational((k * k * 31 + 7) % 97, 211);

  std::vector<Point> pos;
  std::vector<CrossingInfo> crossing_list;
  std::vector<std::vector<std::size_t>> on_chord;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 200) throw ConsistencyError("recover_graph: could not remove concurrent chords");
    pos.clear();
    for (const auto& tk : t) pos.push_back(circle_point(tk));
    crossing_list.clear();
    on_chord.assign(chords, {});
    for (std::size_t i = 0; i < chords; ++i)
      for (std::size_t j = i + 1; j < chords; ++j) {
        auto [a, b] = wires[i];
        auto [c, d] = wires[j];
        if (!(a < c && c < b && b < d)) continue;
        const Point& pa = pos[static_cast<std::size_t>(a)];
        Point d1 = minus(pos[static_cast<std::size_t>(b)], pa);
        Point d2 = minus(pos[static_cast<std::size_t>(d)], pos[static_cast<std::size_t>(c)]);
        Point ac = minus(pos[static_cast<std::size_t>(c)], pa);
        Rational den = cross(d1, d2);
        crossing_list.push_back({static_cast<int>(i), static_cast<int>(j), cross(ac, d2) / den, cross(ac, d1) / den});
        on_chord[i].push_back(crossing_list.size() - 1);
        on_chord[j].push_back(crossing_list.size() - 1);
      }
    // three chords through one point show up as a repeated parameter on a chord
    int bump = -1;
    for (std::size_t i = 0; i < chords && bump < 0; ++i) {
      auto param = [&](std::size_t x) {
        const auto& cr = crossing_list[x];
        return cr.chord_i == static_cast<int>(i) ? cr.s_i : cr.s_j;
      };
      auto& list = on_chord[i];
      std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) { return param(x) < param(y); });
      for (std::size_t k = 1; k < list.size(); ++k)
        if (param(list[k]) == param(list[k - 1])) {
          int lowest = wires[i].first;
          for (std::size_t x : {list[k], list[k - 1]}) {
            const auto& cr = crossing_list[x];
            lowest = std::min({lowest, wires[static_cast<std::size_t>(cr.chord_i)].first, wires[static_cast<std::size_t>(cr.chord_j)].first});
          }
          bump = lowest;
          break;
        }
    }
    if (bump < 0) break;
    t[static_cast<std::size_t>(bump)] += rational(1, 97L * (attempt + 2));
  }

  // Nodes: circle points 0..points-1, then one node per crossing.
  Arrangement ar;
  const int node_count = points + static_cast<int>(crossing_list.size());
  ar.ccw.assign(static_cast<std::size_t>(node_count), {});
  std::vector<int> arc_cw(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) arc_cw[static_cast<std::size_t>(k)] = ar.add_segment(k, (k + 1) % points);

  // chord segments; per crossing node remember the outgoing half-edges along each chord
  std::vector<int> chord_start(chords);
  std::vector<std::array<int, 4>> around(crossing_list.size());  // +i, -i, +j, -j
  for (std::size_t i = 0; i < chords; ++i) {
    std::vector<int> nodes{wires[i].first};
    for (std::size_t x : on_chord[i]) nodes.push_back(points + static_cast<int>(x));
    nodes.push_back(wires[i].second);
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
      int h = ar.add_segment(nodes[k], nodes[k + 1]);
      if (k == 0) chord_start[i] = h;
      if (k > 0) {
        const auto& cr = crossing_list[static_cast<std::size_t>(nodes[k] - points)];
        around[static_cast<std::size_t>(nodes[k] - points)][cr.chord_i == static_cast<int>(i) ? 0 : 2] = h;
      }
      if (k + 1 < nodes.size() - 1) {
        const auto& cr = crossing_list[static_cast<std::size_t>(nodes[k + 1] - points)];
        around[static_cast<std::size_t>(nodes[k + 1] - points)][cr.chord_i == static_cast<int>(i) ? 1 : 3] = h ^ 1;
      }
    }
  }
  // counterclockwise order at a circle point: clockwise arc, counterclockwise arc, chord
  for (int k = 0; k < points; ++k) {
    int chord_out = -1;
    for (std::size_t i = 0; i < chords; ++i) {
      if (wires[i].first == k) chord_out = chord_start[i];
      if (wires[i].second == k) {
        // last segment of chord i ends at k
        int h = chord_start[i] + 2 * static_cast<int>(on_chord[i].size());
        chord_out = h ^ 1;
      }
    }
    ar.ccw[static_cast<std::size_t>(k)] = {arc_cw[static_cast<std::size_t>(k)], arc_cw[static_cast<std::size_t>((k + points - 1) % points)] ^ 1, chord_out};
  }
  for (std::size_t x = 0; x < crossing_list.size(); ++x) {
    const auto& cr = crossing_list[x];
    const auto& wi = wires[static_cast<std::size_t>(cr.chord_i)];
    const auto& wj = wires[static_cast<std::size_t>(cr.chord_j)];
    Point di = minus(pos[static_cast<std::size_t>(wi.second)], pos[static_cast<std::size_t>(wi.first)]);
    Point dj = minus(pos[static_cast<std::size_t>(wj.second)], pos[static_cast<std::size_t>(wj.first)]);
    const auto& a = around[x];
    if (cross(di, dj) > 0)
      ar.ccw[static_cast<std::size_t>(points) + x] = {a[0], a[2], a[1], a[3]};
    else
      ar.ccw[static_cast<std::size_t>(points) + x] = {a[0], a[3], a[1], a[2]};
  }
  ar.slot.assign(ar.origin.size(), 0);
  for (const auto& list : ar.ccw)
    for (std::size_t i = 0; i < list.size(); ++i) ar.slot[static_cast<std::size_t>(list[i])] = i;

  // faces, with the face on the right of each half-edge
  std::vector<int> face(ar.origin.size(), -1);
  std::vector<std::vector<int>> face_cycle;
  for (std::size_t h0 = 0; h0 < ar.origin.size(); ++h0) {
    if (face[h0] != -1) continue;
    const int id = static_cast<int>(face_cycle.size());
    face_cycle.emplace_back();
    for (int h = static_cast<int>(h0); face[static_cast<std::size_t>(h)] == -1; h = ar.next_in_face(h)) {
      face[static_cast<std::size_t>(h)] = id;
      face_cycle.back().push_back(h);
    }
  }
  const int outer = face[static_cast<std::size_t>(arc_cw[0] ^ 1)];

  // two-colour the disk faces; the face holding arc A_i -> B_i is black
  std::vector<int> colour(face_cycle.size(), -1);
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    int f = face[static_cast<std::size_t>(arc_cw[static_cast<std::size_t>(2 * i)])];
    colour[static_cast<std::size_t>(f)] = 1;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int h : face_cycle[static_cast<std::size_t>(f)]) {
      if (h < 2 * points) continue;  // arcs
      int g = face[static_cast<std::size_t>(h ^ 1)];
      if (colour[static_cast<std::size_t>(g)] == -1) {
        colour[static_cast<std::size_t>(g)] = 1 - colour[static_cast<std::size_t>(f)];
        queue.push_back(g);
      } else if (colour[static_cast<std::size_t>(g)] == colour[static_cast<std::size_t>(f)]) {
        throw ConsistencyError("recover_graph: wiring faces are not two-colourable");
      }
    }
  }

  std::vector<int> vertex_of_face(face_cycle.size(), -1);
  for (int i = 0; i < n; ++i) {
    int f = face[static_cast<std::size_t>(arc_cw[static_cast<std::size_t>(2 * i)])];
    if (vertex_of_face[static_cast<std::size_t>(f)] != -1)
      throw ConsistencyError("recover_graph: two boundary vertices share a face");
    vertex_of_face[static_cast<std::size_t>(f)] = i;
  }
  int vertex_count = n;
  for (std::size_t h = 0; h < ar.origin.size(); ++h) {
    int f = face[h];
    if (f == outer || colour[static_cast<std::size_t>(f)] != 1 || vertex_of_face[static_cast<std::size_t>(f)] != -1) continue;
    vertex_of_face[static_cast<std::size_t>(f)] = vertex_count++;
  }

  // one edge per crossing, joining the two black sectors
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < crossing_list.size(); ++x) {
    std::vector<int> ends;
    for (int h : ar.ccw[static_cast<std::size_t>(points) + x]) {
      int f = face[static_cast<std::size_t>(h)];
      if (colour[static_cast<std::size_t>(f)] == 1) ends.push_back(vertex_of_face[static_cast<std::size_t>(f)]);
    }
    if (ends.size() != 2 || ends[0] == ends[1]) throw ConsistencyError("recover_graph: malformed crossing");
    edges.push_back({ends[0], ends[1]});
  }

  // rotation: crossings met while walking each black face clockwise
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(vertex_count));
  for (std::size_t f = 0; f < face_cycle.size(); ++f) {
    const int v = vertex_of_face[f];
    if (v < 0) continue;
    auto cycle = face_cycle[f];
    if (v < n) {
      // start right after the arc A_v -> B_v
      auto at = std::find(cycle.begin(), cycle.end(), arc_cw[static_cast<std::size_t>(2 * v)]);
      std::rotate(cycle.begin(), at + 1, cycle.end());
    }
    for (int h : cycle) {
      int node = ar.origin[static_cast<std::size_t>(h)];
      if (node < points) continue;
      int e = node - points;
      rotation[static_cast<std::size_t>(v)].push_back(edges[static_cast<std::size_t>(e)].u == v ? 2 * e : 2 * e + 1);
    }
  }

  CircularPlanarGraph g(n, vertex_count - n, std::move(edges), std::move(rotation));
  auto back = medial_matching(g);
  if (!back.matching || *back.matching != m)
    throw ConsistencyError("recover_graph: medial matching of the result differs from the input" +
                           (back.diagnostic.empty() ? std::string() : " (" + back.diagnostic + ")"));
  return g;
}

}  // namespace electra
