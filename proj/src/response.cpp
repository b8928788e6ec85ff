#include "electra/network.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace electra {

namespace {

// Response of the weighted Laplacian; edges of weight 0 are absent, and
// interior vertices not reachable from the boundary through positive
// weights are dropped.
ResponseMatrix weighted_response(const CircularPlanarGraph& g, const std::vector<Rational>& w, std::vector<int>* pruned) {
  const int n = g.n(), vcount = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vcount));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[e];
    if (u == v || w[e] == 0) continue;
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<bool> reached(static_cast<std::size_t>(vcount), false);
  std::vector<int> stack;
  for (int b = 0; b < n; ++b) {
    reached[static_cast<std::size_t>(b)] = true;
    stack.push_back(b);
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (!reached[static_cast<std::size_t>(y)]) {
        reached[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
  }
  std::vector<int> interior;  // kept interior vertices
  std::vector<int> slot(static_cast<std::size_t>(vcount), -1);
  if (pruned) pruned->clear();
  for (int v = n; v < vcount; ++v) {
    if (reached[static_cast<std::size_t>(v)]) {
      slot[static_cast<std::size_t>(v)] = static_cast<int>(interior.size());
      interior.push_back(v);
    } else if (pruned) {
      pruned->push_back(v);
    }
  }

  const auto nb = static_cast<std::size_t>(n), ni = interior.size();
  RationalMatrix lbb(nb, nb), lbi(nb, ni), lii(ni, ni);
  auto add = [&](int x, int y, const Rational& c) {
    // Laplacian entry (x, y) += c, split into blocks
    bool xb = x < n, yb = y < n;
    auto xi = static_cast<std::size_t>(xb ? x : slot[static_cast<std::size_t>(x)]);
    auto yi = static_cast<std::size_t>(yb ? y : slot[static_cast<std::size_t>(y)]);
    if (xb && yb)
      lbb(xi, yi) += c;
    else if (xb)
      lbi(xi, yi) += c;
    else if (!yb)
      lii(xi, yi) += c;
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[e];
    if (u == v || w[e] == 0 || !reached[static_cast<std::size_t>(u)]) continue;
    add(u, u, w[e]);
    add(v, v, w[e]);
    add(u, v, -w[e]);
    add(v, u, -w[e]);
  }
  if (ni == 0) return -lbb;
  RationalMatrix lib(ni, nb);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nb; ++j) lib(i, j) = lbi(j, i);
  RationalMatrix x;
  try {
    x = solve(lii, lib);
  } catch (const SingularMatrixError& err) {
    throw EmbeddingError(std::string("interior Laplacian block is singular: ") + err.what());
  }
  return lbi * x - lbb;
}

bool is_circular(const CircularPair& c, int n) {
  if (c.p.empty() || c.p.size() != c.q.size()) return false;
  std::vector<int> seq(c.p);
  seq.insert(seq.end(), c.q.rbegin(), c.q.rend());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int x : seq) {
    if (x < 0 || x >= n || used[static_cast<std::size_t>(x)]) return false;
    used[static_cast<std::size_t>(x)] = true;
  }
  // clockwise cyclic order: at most one descent around the cycle
  int descents = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[(i + 1) % seq.size()] < seq[i]) ++descents;
  return descents <= 1;
}

}  // namespace

ResponseMatrix response_matrix(const Network& net, std::vector<int>* pruned) {
  return weighted_response(net.graph, net.conductance, pruned);
}

std::string to_string(const CircularPair& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.p.size(); ++i) out += (i ? " " : "") + std::to_string(c.p[i] + 1);
  out += ";";
  for (std::size_t i = 0; i < c.q.size(); ++i) out += (i ? " " : "") + std::to_string(c.q[i] + 1);
  return out + ")";
}

CircularPair normalize(const CircularPair& c, int n) {
  if (!is_circular(c, n)) throw std::invalid_argument("not a circular pair of order " + std::to_string(n) + ": " + to_string(c));
  CircularPair flipped{std::vector<int>(c.q.rbegin(), c.q.rend()), std::vector<int>(c.p.rbegin(), c.p.rend())};
  return std::min(c, flipped);
}

std::vector<CircularPair> circular_pairs(int n) {
  std::vector<CircularPair> out;
  std::set<CircularPair> seen;
  for (int k = 1; 2 * k <= n; ++k) {
    // vertex sets of size 2k in lexicographic order
    std::vector<int> pick(static_cast<std::size_t>(2 * k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      for (int r = 0; r < 2 * k; ++r) {
        CircularPair c;
        for (int i = 0; i < k; ++i) c.p.push_back(pick[static_cast<std::size_t>((r + i) % (2 * k))]);
        for (int i = 2 * k - 1; i >= k; --i) c.q.push_back(pick[static_cast<std::size_t>((r + i) % (2 * k))]);
        auto norm = normalize(c, n);
        if (seen.insert(norm).second) out.push_back(norm);
      }
      int i = 2 * k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 2 * k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < 2 * k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

Rational circular_minor(const ResponseMatrix& m, const CircularPair& c) {
  std::vector<std::size_t> rows, cols;
  for (int x : c.p) rows.push_back(static_cast<std::size_t>(x));
  for (int x : c.q) cols.push_back(static_cast<std::size_t>(x));
  return det(m.submatrix(rows, cols));
}

bool has_connection(const CircularPlanarGraph& g, const CircularPair& c) {
  const int n = g.n(), vcount = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vcount));
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  const std::size_t k = c.p.size();
  std::vector<bool> used(static_cast<std::size_t>(vcount), false);
  std::set<std::pair<std::size_t, std::vector<bool>>> failed;

  std::function<bool(std::size_t)> route;
  // extend the path of pair i from x; interior vertices only, then q_i
  std::function<bool(std::size_t, int)> walk = [&](std::size_t i, int x) -> bool {
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (y == c.q[i]) {
        if (route(i + 1)) return true;
        continue;
      }
      if (y < n || used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(y)] = true;
      bool ok = walk(i, y);
      used[static_cast<std::size_t>(y)] = false;
      if (ok) return true;
    }
    return false;
  };
  route = [&](std::size_t i) -> bool {
    if (i == k) return true;
    auto key = std::pair{i, used};
    if (failed.count(key)) return false;
    bool ok = walk(i, c.p[i]);
    if (!ok) failed.insert(std::move(key));
    return ok;
  };
  return route(0);
}

ConnectionSet pi_set(const CircularPlanarGraph& g) {
  ConnectionSet out;
  for (const auto& c : circular_pairs(g.n()))
    if (has_connection(g, c)) out.push_back(c);
  return out;
}

ResponseAxiomReport verify_response_axioms(const Network& net) {
  ResponseAxiomReport rep;
  const auto m = response_matrix(net);
  const auto n = static_cast<std::size_t>(net.graph.n());
  for (std::size_t i = 0; i < n; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      sum += m(i, j);
      if (m(i, j) != m(j, i) && i < j) {
        rep.symmetric = false;
        rep.violations.push_back("M is not symmetric at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      }
    }
    if (sum != 0) {
      rep.zero_row_sums = false;
      rep.violations.push_back("row " + std::to_string(i + 1) + " sums to " + to_string(sum));
    }
  }
  for (const auto& c : circular_pairs(net.graph.n())) {
    ++rep.pairs_checked;
    Rational minor = circular_minor(m, c);
    bool connected = has_connection(net.graph, c);
    if (minor < 0) {
      rep.minors_nonnegative = false;
      rep.violations.push_back("minor " + to_string(c) + " = " + to_string(minor) + " is negative");
    }
    if ((minor > 0) != connected) {
      rep.positivity_matches_connections = false;
      rep.violations.push_back("minor " + to_string(c) + " = " + to_string(minor) + " but connection " +
                               (connected ? "exists" : "is absent"));
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

bool is_critical(const CircularPlanarGraph& g) {
  const auto pi = pi_set(g);
  auto loses_pair = [&](const CircularPlanarGraph& h) {
    auto sub = pi_set(h);
    return !std::includes(sub.begin(), sub.end(), pi.begin(), pi.end());
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!loses_pair(delete_edge(g, static_cast<int>(e)))) return false;
    const auto& [u, v] = g.edges()[e];
    if (u == v || (g.is_boundary(u) && g.is_boundary(v))) continue;
    if (!loses_pair(contract_edge(g, static_cast<int>(e)))) return false;
  }
  return true;
}

ClosureReport closure_limit_check(const Network& net, int e) {
  if (e < 0 || static_cast<std::size_t>(e) >= net.graph.edge_count())
    throw std::out_of_range("edge " + std::to_string(e) + " does not exist");
  ClosureReport rep;
  const auto idx = static_cast<std::size_t>(e);
  auto weights = net.conductance;
  weights[idx] = 0;
  rep.deletion_exact = weighted_response(net.graph, weights, nullptr) == response_matrix(delete_edge(net, e));

  const auto [u, v] = net.graph.edges()[idx];
  if (u == v) {
    rep.note = "edge is a self-loop; contraction limit skipped";
  } else if (net.graph.is_boundary(u) && net.graph.is_boundary(v)) {
    rep.note = "edge joins two boundary vertices; contraction limit skipped";
  } else {
    rep.contraction_checked = true;
    const auto target = response_matrix(contract_edge(net, e));
    for (long g : {100L, 10000L, 1000000L}) {
      weights[idx] = g;
      rep.ladder.emplace_back(g);
      rep.gaps.push_back(max_abs_difference(weighted_response(net.graph, weights, nullptr), target));
    }
    rep.gaps_decreasing = true;
    for (std::size_t i = 1; i < rep.gaps.size(); ++i) rep.gaps_decreasing = rep.gaps_decreasing && rep.gaps[i] < rep.gaps[i - 1];
    rep.final_gap_small = rep.gaps.back() < rational(1, 1000);
  }
  rep.pass = rep.deletion_exact && (!rep.contraction_checked || (rep.gaps_decreasing && rep.final_gap_small));
  return rep;
}

}  // namespace electra
