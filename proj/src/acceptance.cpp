#include "electra/acceptance.hpp"

#include "electra/enumeration.hpp"
#include "electra/poset.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace electra {

namespace {

// |EP_(n,r)| for n = 1..8 as printed in the rank table.
const std::vector<std::vector<long>> kTable = {
    {1},
    {1, 1},
    {1, 3, 3, 1},
    {1, 6, 14, 16, 10, 4, 1},
    {1, 10, 40, 85, 110, 97, 65, 35, 15, 5, 1},
    {1, 15, 90, 295, 609, 873, 948, 840, 636, 421, 246, 126, 56, 21, 6, 1},
    {1, 21, 175, 805, 2366, 4872, 7567, 9459, 10031, 9359, 7861, 6027, 4249, 2765, 1661, 917, 462, 210, 84, 28, 7, 1},
    {1,     28,    308,    1876,   7350,  20272, 42090, 69620, 96334, 115980, 125044, 123176, 112380, 95836, 76868,
     58220, 41734, 28344,  18236,  11096, 6364,  3424,  1716,  792,   330,    120,    36,     8,      1},
};

const std::vector<long> kXValues = {1, 2, 8, 52, 464, 5184, 68928, 1057584};

const std::vector<std::string> kNames = {
    "recurrence-oracle", "rank-tables", "graded",           "diamond",         "eulerian",
    "gf-identity",       "touchard",    "rank-gf-agreement", "highrank",        "asymptotics",
    "response-axioms",   "local-moves", "bijection",         "closure-limits",  "lambda-explorer",
};

IntPolynomial table_polynomial(int n) {
  std::vector<Integer> cs;
  for (long v : kTable[static_cast<std::size_t>(n - 1)]) cs.emplace_back(v);
  return IntPolynomial(std::move(cs));
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

struct Ctx {
  const AcceptanceOptions& opts;
  int lim(int n) const { return opts.max_n >= 6 ? n : std::min(n, opts.max_n); }
};

CriterionResult make(int id) { return CriterionResult{id, criterion_name(id), true, "", Json::object()}; }

void fail(CriterionResult& r, const std::string& why) {
  if (r.pass) r.detail.clear();
  r.pass = false;
  r.data["failures"].push_back(why);
}

// Finishes the detail line: failures win over the success summary.
void finish(CriterionResult& r, const std::string& ok) {
  if (r.pass) {
    r.detail = ok;
    return;
  }
  std::vector<std::string> fs;
  for (const auto& f : r.data["failures"]) fs.push_back(f.get<std::string>());
  if (fs.size() > 3) {
    auto more = fs.size() - 3;
    fs.resize(3);
    fs.push_back("... " + std::to_string(more) + " more");
  }
  r.detail = join(fs, "; ");
}

CriterionResult recurrence_oracle(const Ctx& c) {
  auto r = make(1);
  const int N = 8, B = c.lim(8);
  auto seq = x_sequence(N);
  Json rows = Json::array();
  for (int n = 1; n <= N; ++n) {
    Json row{{"n", n}, {"recurrence", integer_json(seq.at(n))}};
    if (seq.at(n) != kXValues[static_cast<std::size_t>(n - 1)])
      fail(r, "X_" + std::to_string(n) + " = " + to_string(seq.at(n)) + " by recurrence");
    if (n <= B) {
      auto bf = x_bruteforce(n);
      row["bruteforce"] = integer_json(bf);
      if (bf != seq.at(n)) fail(r, "X_" + std::to_string(n) + " brute force " + to_string(bf));
    }
    rows.push_back(row);
  }
  r.data["rows"] = rows;
  finish(r, "X_1..X_8 = 1, 2, 8, ... 1057584 by recurrence; brute force agrees for n<=" + std::to_string(B));
  return r;
}

CriterionResult rank_tables(const Ctx& c) {
  auto r = make(2);
  const int N = c.lim(6);
  for (int n = 1; n <= N; ++n) {
    auto sizes = rank_sizes(build_ep(n));
    const auto& row = kTable[static_cast<std::size_t>(n - 1)];
    std::vector<long> got(sizes.begin(), sizes.end());
    r.data["rows"].push_back(got);
    if (got != row) fail(r, "row n=" + std::to_string(n) + " differs from the table");
  }
  finish(r, "rank rows n=1.." + std::to_string(N) + " equal the table");
  return r;
}

CriterionResult graded(const Ctx& c) {
  auto r = make(3);
  const int N = c.lim(6);
  std::size_t covers = 0;
  for (int n = 1; n <= N; ++n) {
    auto rep = check_graded(build_ep(n).order);
    covers += rep.covers_checked;
    if (!rep.pass) fail(r, std::to_string(rep.violations.size()) + " violations at n=" + std::to_string(n));
  }
  r.data["covers_checked"] = covers;
  finish(r, std::to_string(covers) + " covers over n<=" + std::to_string(N) + ", 0 violations");
  return r;
}

CriterionResult diamond(const Ctx& c) {
  auto r = make(4);
  const int N = c.lim(5);
  std::size_t intervals = 0;
  for (int n = 1; n <= N; ++n) {
    auto rep = check_diamond(build_ep(n).order);
    intervals += rep.intervals_checked;
    if (!rep.pass) fail(r, std::to_string(rep.violations.size()) + " violations at n=" + std::to_string(n));
  }
  r.data["intervals_checked"] = intervals;
  finish(r, std::to_string(intervals) + " length-2 intervals over n<=" + std::to_string(N) + ", 0 violations");
  return r;
}

CriterionResult eulerian(const Ctx& c) {
  auto r = make(5);
  int N = c.lim(5);
  if (c.opts.extended && c.opts.max_n >= 6) N = 6;
  std::size_t intervals = 0;
  for (int n = 1; n <= N; ++n) {
    auto rep = check_eulerian(build_ep(n).order);
    intervals += rep.intervals_checked;
    if (!rep.pass) fail(r, std::to_string(rep.counterexamples.size()) + " intervals off at n=" + std::to_string(n));
  }
  r.data["max_n"] = N;
  r.data["intervals_checked"] = intervals;
  finish(r, "mu = (-1)^length on " + std::to_string(intervals) + " intervals over n<=" + std::to_string(N));
  return r;
}

CriterionResult gf_identity(const Ctx&) {
  auto r = make(6);
  const int N = 12;
  for (int n = 2; n <= N; ++n) {
    auto rep = check_gf_identity(n);
    r.data["rows"].push_back({{"n", n}, {"lhs", integer_json(rep.lhs)}, {"rhs", integer_json(rep.rhs)}, {"pass", rep.pass}});
    if (!rep.pass) fail(r, "n=" + std::to_string(n) + ": " + to_string(rep.lhs) + " != " + to_string(rep.rhs));
  }
  for (auto [n, v] : {std::pair{2, 2}, {3, 9}, {4, 60}})
    if (n <= N && check_gf_identity(n).lhs != v) fail(r, "hand value at n=" + std::to_string(n));
  finish(r, "[t^(n-1)]X(t)^n = n(2n-3)!! for n=2.." + std::to_string(N));
  return r;
}

CriterionResult touchard(const Ctx& c) {
  auto r = make(7);
  const int N = c.lim(7), M = 8;
  for (int n = 1; n <= N; ++n)
    if (touchard_polynomial(n) != crossing_distribution(n)) fail(r, "T_" + std::to_string(n) + " differs from brute force");
  for (int n = 1; n <= M; ++n)
    if (touchard_polynomial(n).evaluate(Integer(1)) != double_factorial(2 * n - 1))
      fail(r, "T_" + std::to_string(n) + "(1) != (2n-1)!!");
  finish(r, "T_n = crossing distribution for n<=" + std::to_string(N) + ", T_n(1) = (2n-1)!! for n<=" + std::to_string(M));
  return r;
}

CriterionResult rank_gf_agreement(const Ctx& c) {
  auto r = make(8);
  const int N = c.lim(5);
  for (int n = 1; n <= N; ++n) {
    auto p = rank_gf_poset(n), m = rank_gf_mobius(n), b = rank_gf_bivariate(n);
    if (p != m || m != b) fail(r, "methods disagree at n=" + std::to_string(n));
  }
  std::string ok = "poset = mobius = bivariate for n<=" + std::to_string(N);
  auto m = rank_gf_mobius(6), b = rank_gf_bivariate(6);
  if (m != b || b != table_polynomial(6)) fail(r, "mobius, bivariate and table disagree at n=6");
  r.data["n6"] = polynomial_json(b);
  ok += "; mobius = bivariate = table row at n=6";
  if (c.opts.max_n >= 6) {
    if (rank_gf_poset(6) != m) fail(r, "poset differs at n=6");
    ok += " = poset";
  }
  finish(r, ok);
  return r;
}

CriterionResult highrank_check(const Ctx&) {
  auto r = make(9);
  const int N = 8;
  std::size_t checked = 0;
  for (int n = 1; n <= N; ++n) {
    const auto& row = kTable[static_cast<std::size_t>(n - 1)];
    const int top = n * (n - 1) / 2;
    for (int k = 0; k <= n - 1 && k <= top; ++k, ++checked) {
      auto v = highrank(n, k);
      if (v != row[static_cast<std::size_t>(top - k)])
        fail(r, "highrank(" + std::to_string(n) + "," + std::to_string(k) + ") = " + to_string(v));
    }
  }
  r.data["entries_checked"] = checked;
  finish(r, std::to_string(checked) + " top-rank entries match for n<=" + std::to_string(N));
  return r;
}

CriterionResult asymptotics(const Ctx&) {
  auto r = make(10);
  const int N = 12;
  const Rational tolerance = rational(8, 100);
  auto rep = asymptotics_report(N);
  if (!rep.ratio_pass) fail(r, "ratio inequality fails for some 6<=n<=" + std::to_string(N));
  if (!rep.density_increasing) fail(r, "X_n/(2n-1)!! not increasing from n=6");
  if (!(rep.density_gap < tolerance)) fail(r, "gap to e^(-1/2) is " + to_decimal(rep.density_gap));
  const auto& last = rep.rows.back();
  r.data["density"] = to_decimal(last.density);
  r.data["gap"] = to_decimal(rep.density_gap);
  r.data["tolerance"] = to_string(tolerance);
  finish(r, "ratio holds 6<=n<=" + std::to_string(N) + "; density increasing; |X_" + std::to_string(N) + "/" + std::to_string(2 * N - 1) + "!! - e^(-1/2)| = " +
                to_decimal(rep.density_gap) + " < 0.08");
  return r;
}

Rational random_conductance(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 12), den(1, 7);
  return rational(num(rng), den(rng));
}

Network random_network(const CircularPlanarGraph& g, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (std::size_t e = 0; e < g.edge_count(); ++e) c.push_back(random_conductance(rng));
  return Network(g, std::move(c));
}

CriterionResult response_axioms(const Ctx& c) {
  auto r = make(11);
  const int N = c.lim(4);
  std::vector<std::vector<Matching>> full(static_cast<std::size_t>(N + 1));
  for (int n = 2; n <= N; ++n) full[static_cast<std::size_t>(n)] = enumerate_full(n);
  std::mt19937_64 rng(c.opts.seed);
  std::size_t pairs = 0;
  const int trials = N >= 2 ? 200 : 0;
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(2, N)(rng);
    const auto& pool = full[static_cast<std::size_t>(n)];
    const auto& m = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    auto rep = verify_response_axioms(random_network(recover_graph(m), rng));
    pairs += rep.pairs_checked;
    if (!rep.pass) fail(r, "trial " + std::to_string(t) + " on " + to_string(m) + ": " + join(rep.violations, ", "));
  }
  r.data["networks"] = trials;
  r.data["pairs_checked"] = pairs;
  r.data["seed"] = c.opts.seed;
  finish(r, std::to_string(trials) + " random networks of order <=" + std::to_string(N) + ", " + std::to_string(pairs) +
                " circular minors, seed " + std::to_string(c.opts.seed));
  return r;
}

CriterionResult local_moves(const Ctx& c) {
  auto r = make(12);
  std::mt19937_64 rng(c.opts.seed ^ 0x9e3779b97f4a7c15ULL);
  const CircularPlanarGraph y(3, 1, {{3, 0}, {3, 1}, {3, 2}}, {{1}, {3}, {5}, {0, 2, 4}});
  const CircularPlanarGraph tri(3, 0, {{0, 1}, {1, 2}, {2, 0}}, {{0, 5}, {2, 1}, {4, 3}});
  const CircularPlanarGraph doubled(3, 0, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}, {{0, 6, 5}, {2, 7, 1}, {4, 3}});
  const CircularPlanarGraph chain(2, 1, {{0, 2}, {2, 1}}, {{0}, {3}, {1, 2}});
  const CircularPlanarGraph looped(2, 0, {{0, 1}, {0, 0}}, {{0, 2, 3}, {1}});
  const CircularPlanarGraph spiky(2, 1, {{0, 1}, {0, 2}}, {{0, 2}, {1}, {3}});

  std::map<std::string, int> counts;
  auto same = [&](const std::string& move, const Network& before, const Network& after) {
    ++counts[move];
    if (response_matrix(before) != response_matrix(after)) fail(r, move + " changed the response");
  };
  for (int t = 0; t < 25; ++t) {
    auto ny = random_network(y, rng);
    auto d = y_delta(ny, 3);
    same("y-delta", ny, d);
    auto back = delta_y(d, 0, 1, 2);
    same("delta-y", d, back);
    ++counts["round-trip"];
    if (back.conductance != ny.conductance || !(back.graph == ny.graph)) fail(r, "Y-Delta round trip lost conductances");
    auto nt = random_network(tri, rng);
    same("delta-y", nt, delta_y(nt, 0, 1, 2));
    auto nd = random_network(doubled, rng);
    same("parallel", nd, reduce(nd, Reduction::parallel, 0));
    auto nc = random_network(chain, rng);
    same("series", nc, reduce(nc, Reduction::series, 2));
    auto nl = random_network(looped, rng);
    same("self-loop", nl, reduce(nl, Reduction::self_loop, 1));
    auto ns = random_network(spiky, rng);
    same("spike", ns, reduce(ns, Reduction::spike, 2));
  }
  // every degree-3 hub of every critical representative with n <= 4
  for (int n = 3; n <= c.lim(4); ++n)
    for (const auto& m : enumerate_full(n)) {
      auto net = random_network(recover_graph(m), rng);
      for (int w = net.graph.n(); w < net.graph.vertex_count(); ++w) {
        if (net.graph.degree(w) != 3) continue;
        try {
          same("y-delta", net, y_delta(net, w));
        } catch (const TransformationError&) {
        }
      }
    }
  std::vector<std::string> parts;
  for (const auto& [move, k] : counts) {
    parts.push_back(move + " " + std::to_string(k));
    r.data["moves"][move] = k;
  }
  finish(r, "response invariant: " + join(parts));
  return r;
}

CriterionResult bijection(const Ctx& c) {
  auto r = make(13);
  const int N = c.lim(5);
  std::size_t cases = 0;
  for (int n = 1; n <= N; ++n)
    for (const auto& m : enumerate_full(n)) {
      ++cases;
      auto g = recover_graph(m);
      auto med = medial_matching(g);
      if (med.matching != m) fail(r, "round trip of " + to_string(m) + (med.diagnostic.empty() ? "" : ": " + med.diagnostic));
      if (static_cast<int>(g.edge_count()) != crossing_count(m)) fail(r, "edge count of " + to_string(m));
    }
  r.data["cases"] = cases;
  finish(r, std::to_string(cases) + " full matchings with n<=" + std::to_string(N) + " round-trip, edges = crossings");
  return r;
}

CriterionResult closure_limits(const Ctx& c) {
  auto r = make(14);
  const int N = c.lim(4);
  std::size_t edges = 0, contractions = 0;
  for (int n = 1; n <= N; ++n)
    for (const auto& m : enumerate_full(n)) {
      auto net = unit_network(recover_graph(m));
      for (std::size_t e = 0; e < net.graph.edge_count(); ++e) {
        ++edges;
        auto rep = closure_limit_check(net, static_cast<int>(e));
        if (rep.contraction_checked) ++contractions;
        if (!rep.pass) fail(r, to_string(m) + " edge " + std::to_string(e) + ": " + rep.note);
      }
    }
  r.data["edges"] = edges;
  r.data["contractions"] = contractions;
  r.data["ladder"] = {"100", "10000", "1000000"};
  r.data["threshold"] = "1/1000";
  finish(r, std::to_string(edges) + " edges exact at conductance 0; " + std::to_string(contractions) +
                " contraction ladders 1e2,1e4,1e6 decreasing, final gap < 1e-3");
  return r;
}

CriterionResult lambda_explorer(const Ctx&) {
  auto r = make(15);
  const int N = 12;
  auto two = x_lambda_sequence(2, N);
  if (two.values != x_sequence(N).values) fail(r, "lambda = 2 does not reproduce X_n");
  auto minus = x_lambda(-1, N);
  Json row = Json::array();
  for (auto& v : minus.sequence.values) row.push_back(integer_json(v));
  r.data["lambda_minus_one"] = row;
  if (!minus.catalan_claim_holds) {
    std::vector<std::string> got, want;
    for (int n = 1; n <= std::min(N, 5); ++n) {
      got.push_back(to_string(minus.sequence.at(n)));
      want.push_back(to_string(Integer((n % 2 ? 1 : -1) * catalan(static_cast<unsigned long>(n)))));
    }
    fail(r, "lambda = -1 gives " + join(got) + " ..., not (-1)^(n+1) C_n = " + join(want) + " ...");
  }
  Json table = Json::array();
  for (int lambda = 1; lambda <= 4; ++lambda)
    for (const auto& row : x_lambda(lambda, std::min(N, 10)).conjecture)
      table.push_back({{"lambda", row.lambda}, {"n", row.n}, {"lhs", integer_json(row.lhs)}, {"rhs", to_string(row.rhs)}, {"agree", row.agree}});
  r.data["conjecture"] = table;
  finish(r, "lambda = 2 reproduces X_n; lambda = -1 is (-1)^(n+1) C_n for n<=" + std::to_string(N) + "; conjecture table has " +
                std::to_string(table.size()) + " rows");
  return r;
}

}  // namespace

std::string criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  return kNames[static_cast<std::size_t>(id - 1)];
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  criterion_name(id);
  const Ctx c{opts};
  switch (id) {
    case 1: return recurrence_oracle(c);
    case 2: return rank_tables(c);
    case 3: return graded(c);
    case 4: return diamond(c);
    case 5: return eulerian(c);
    case 6: return gf_identity(c);
    case 7: return touchard(c);
    case 8: return rank_gf_agreement(c);
    case 9: return highrank_check(c);
    case 10: return asymptotics(c);
    case 11: return response_axioms(c);
    case 12: return local_moves(c);
    case 13: return bijection(c);
    case 14: return closure_limits(c);
    default: return lambda_explorer(c);
  }
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << (r.id < 10 ? " " : "") << r.id << ' ' << r.name << ": " << r.detail;
  return out.str();
}

}  // namespace electra
