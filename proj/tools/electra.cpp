// electra: command-line front end. stdout carries the artifact (JSON unless
// --text), stderr carries progress. Exit 0 on success, 1 when a check
// fails, 2 on usage errors.
#include "electra/acceptance.hpp"
#include "electra/enumeration.hpp"
#include "electra/io.hpp"
#include "electra/poset.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace electra;

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

/// Input problems that are the caller's fault.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A check that ran and failed; the artifact has already been printed.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool text = false;
  bool allow_large = false;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void guard(int n, int limit, int large_limit, bool allow_large, const std::string& what) {
  if (n < 1) throw UsageError(what + " needs n >= 1");
  if (n > large_limit || (n > limit && !allow_large))
    throw UsageError(what + " is limited to n <= " + std::to_string(limit) +
                     (n <= large_limit ? " without --allow-large" : " (" + std::to_string(large_limit) + " with --allow-large)"));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string poly_text(const IntPolynomial& p) {
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) out += (k ? " " : "") + to_string(p.coefficients()[k]);
  return out;
}

// ---------------------------------------------------------------- poset

struct PosetArgs {
  int n = 0;
  std::string checks;
  std::string format;
};

int run_poset(const PosetArgs& a, const Common& c) {
  guard(a.n, kMaxPosetOrder, kMaxPosetOrderLarge, c.allow_large, "poset");
  std::cerr << "building EP_" << a.n << "\n";
  auto p = build_ep(a.n, c.allow_large);
  if (!a.format.empty()) {
    ExportFormat f;
    try {
      f = parse_export_format(a.format);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    export_poset(p, f, std::cout);
    return 0;
  }
  auto sizes = rank_sizes(p);
  Json out{{"n", a.n}, {"elements", p.order.size()}, {"covers", p.order.cover_count()}, {"rank_sizes", sizes}};
  Json checks = Json::object();
  bool ok = true;
  for (const auto& name : split(a.checks, ',')) {
    std::cerr << "checking " << name << "\n";
    bool pass;
    Json detail;
    if (name == "graded") {
      auto r = check_graded(p.order);
      pass = r.pass;
      detail = {{"covers_checked", r.covers_checked}, {"violations", r.violations.size()}};
    } else if (name == "diamond") {
      auto r = check_diamond(p.order);
      pass = r.pass;
      detail = {{"intervals_checked", r.intervals_checked}, {"violations", r.violations.size()}};
    } else if (name == "eulerian") {
      auto r = check_eulerian(p.order);
      pass = r.pass;
      detail = {{"intervals_checked", r.intervals_checked}, {"counterexamples", r.counterexamples.size()}};
    } else if (name == "unimodal") {
      auto r = check_unimodal(sizes);
      pass = r.pass;
      detail = {{"peak", r.peak}};
    } else {
      throw UsageError("unknown check '" + name + "' (graded, diamond, eulerian, unimodal)");
    }
    detail["pass"] = pass;
    checks[name] = detail;
    ok = ok && pass;
  }
  out["checks"] = checks;
  out["pass"] = ok;
  if (c.text) {
    std::cout << "EP_" << a.n << ": " << p.order.size() << " elements, " << p.order.cover_count() << " covers\n";
    std::cout << "rank sizes:";
    for (auto s : sizes) std::cout << ' ' << s;
    std::cout << '\n';
    for (auto it = checks.begin(); it != checks.end(); ++it)
      std::cout << std::left << std::setw(10) << it.key() << (it.value()["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
  } else {
    emit(out);
  }
  return ok ? 0 : kExitCheck;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  int n = 0;
  std::string method = "both";
  bool csv = false;
};

int run_count(const CountArgs& a, const Common& c) {
  const bool rec = a.method != "bruteforce", bf = a.method != "recurrence";
  if (a.n < 1) throw UsageError("count needs n >= 1");
  if (bf) guard(a.n, kMaxFullOrder, kMaxFullOrderLarge, c.allow_large, "brute-force count");
  if (a.csv) {
    auto seq = x_sequence(a.n);
    std::cout << "n,X_n" << (bf ? ",bruteforce" : "") << '\n';
    for (int k = 1; k <= a.n; ++k) {
      std::cout << k << ',' << to_string(seq.at(k));
      if (bf) std::cout << ',' << to_string(x_bruteforce(k, c.allow_large));
      std::cout << '\n';
    }
    return 0;
  }
  Json out{{"n", a.n}};
  Integer r, b;
  if (rec) {
    r = x_sequence(a.n).at(a.n);
    out["recurrence"] = integer_json(r);
  }
  if (bf) {
    std::cerr << "enumerating full matchings of order " << a.n << "\n";
    b = x_bruteforce(a.n, c.allow_large);
    out["bruteforce"] = integer_json(b);
  }
  const bool agree = !(rec && bf) || r == b;
  if (rec && bf) out["agree"] = agree;
  if (c.text) {
    if (rec) std::cout << "recurrence  " << to_string(r) << '\n';
    if (bf) std::cout << "bruteforce  " << to_string(b) << '\n';
    if (rec && bf) std::cout << "agree       " << (agree ? "yes" : "NO") << '\n';
  } else {
    emit(out);
  }
  return agree ? 0 : kExitCheck;
}

// ---------------------------------------------------------------- rankgf

struct RankGfArgs {
  int n = 0;
  std::string method = "all";
  bool touchard = false;
  bool highrank = false;
};

int run_rankgf(const RankGfArgs& a, const Common& c) {
  std::vector<std::string> methods = a.method == "all" ? std::vector<std::string>{"poset", "mobius", "bivariate"}
                                                        : std::vector<std::string>{a.method};
  if (a.method == "all" && a.n > kMaxPosetOrder && !c.allow_large) methods.erase(methods.begin());
  Json out{{"n", a.n}};
  std::vector<IntPolynomial> polys;
  for (const auto& m : methods) {
    std::cerr << "rank generating function by " << m << "\n";
    IntPolynomial p;
    if (m == "poset") {
      guard(a.n, kMaxPosetOrder, kMaxPosetOrderLarge, c.allow_large, "poset method");
      p = rank_gf_poset(a.n, c.allow_large);
    } else if (m == "mobius") {
      guard(a.n, 8, 8, false, "mobius method");
      p = rank_gf_mobius(a.n);
    } else {
      guard(a.n, 10, 10, false, "bivariate method");
      p = rank_gf_bivariate(a.n);
    }
    out["methods"][m] = polynomial_json(p);
    polys.push_back(p);
  }
  bool ok = std::all_of(polys.begin(), polys.end(), [&](const IntPolynomial& p) { return p == polys.front(); });
  if (polys.size() > 1) out["agree"] = ok;
  if (a.highrank) {
    const int top = a.n * (a.n - 1) / 2;
    for (int k = 0; k <= a.n - 1 && k <= top; ++k) {
      auto v = highrank(a.n, k);
      bool match = polys.front().coeff(static_cast<std::size_t>(top - k)) == v;
      out["highrank"].push_back({{"c", k}, {"rank", top - k}, {"closed_form", integer_json(v)}, {"match", match}});
      ok = ok && match;
    }
  }
  if (a.touchard) {
    guard(a.n, kMaxTouchardOrder, kMaxTouchardOrder, false, "touchard");
    auto t = touchard_polynomial(a.n);
    out["touchard"] = polynomial_json(t);
    if (a.n <= 7 || (a.n <= kMaxFullOrder && c.allow_large)) {
      bool match = crossing_distribution(a.n, c.allow_large) == t;
      out["touchard_matches_bruteforce"] = match;
      ok = ok && match;
    }
  }
  out["pass"] = ok;
  if (c.text) {
    for (std::size_t i = 0; i < methods.size(); ++i) std::cout << std::left << std::setw(10) << methods[i] << poly_text(polys[i]) << '\n';
    if (a.touchard) std::cout << std::left << std::setw(10) << "touchard" << poly_text(touchard_polynomial(a.n)) << '\n';
    std::cout << (ok ? "agree" : "DISAGREE") << '\n';
  } else {
    emit(out);
  }
  return ok ? 0 : kExitCheck;
}

// ---------------------------------------------------------------- asymptotics

struct AsymptoticsArgs {
  int N = 12;
  bool gf = false;
  std::optional<int> lambda;
};

int run_asymptotics(const AsymptoticsArgs& a, const Common& c) {
  if (a.N < 8 || a.N > 200) throw UsageError("asymptotics needs 8 <= N <= 200");
  auto rep = asymptotics_report(a.N);
  bool ok = rep.ratio_pass && rep.density_increasing;
  Json out{{"N", a.N}};
  for (const auto& r : rep.rows) {
    Json row{{"n", r.n},
             {"X", integer_json(r.x)},
             {"all", integer_json(r.all)},
             {"density", to_decimal(r.density)},
             {"D_over_X", to_decimal(r.d_ratio)},
             {"Y_over_X", to_decimal(r.y_ratio)}};
    if (r.ratio_checked) row["ratio_holds"] = r.ratio_holds;
    out["rows"].push_back(row);
  }
  out["ratio_pass"] = rep.ratio_pass;
  out["density_increasing"] = rep.density_increasing;
  out["density_gap"] = to_decimal(rep.density_gap);
  out["d_ratio_gap"] = to_decimal(rep.d_ratio_gap);
  if (a.gf) {
    for (int n = 2; n <= std::min(a.N, 12); ++n) {
      auto g = check_gf_identity(n);
      out["gf_identity"].push_back({{"name", "gf-identity"}, {"n", n}, {"lhs", integer_json(g.lhs)}, {"rhs", integer_json(g.rhs)}, {"pass", g.pass}});
      ok = ok && g.pass;
    }
  }
  if (a.lambda) {
    if (*a.lambda == 0) throw UsageError("lambda must be nonzero");
    auto lr = x_lambda(*a.lambda, std::min(a.N, 20));
    Json lj{{"lambda", *a.lambda}};
    for (const auto& v : lr.sequence.values) lj["sequence"].push_back(integer_json(v));
    if (lr.catalan_claim_checked) lj["alternating_catalan"] = lr.catalan_claim_holds;
    for (const auto& row : lr.conjecture)
      lj["conjecture"].push_back({{"n", row.n}, {"lhs", integer_json(row.lhs)}, {"rhs", to_string(row.rhs)}, {"agree", row.agree}});
    out["lambda"] = lj;
  }
  out["pass"] = ok;
  if (c.text) {
    std::cout << std::left << std::setw(4) << "n" << std::setw(22) << "X_n" << std::setw(14) << "density" << std::setw(14)
              << "D_n/X_n" << "ratio\n";
    for (const auto& r : rep.rows)
      std::cout << std::setw(4) << r.n << std::setw(22) << to_string(r.x) << std::setw(14) << to_decimal(r.density) << std::setw(14)
                << to_decimal(r.d_ratio) << (r.ratio_checked ? (r.ratio_holds ? "holds" : "FAILS") : "-") << '\n';
    std::cout << "gap to e^(-1/2): " << to_decimal(rep.density_gap) << '\n';
  } else {
    emit(out);
  }
  return ok ? 0 : kExitCheck;
}

// ---------------------------------------------------------------- network

struct NetworkArgs {
  std::string action;
  std::string in;
  int site = -1;
  std::vector<int> triangle;
  std::string rule;
};

int run_network(const NetworkArgs& a, const Common& c) {
  Network net = [&] {
    try {
      return network_from_json(read_json(a.in));
    } catch (const std::invalid_argument& e) {
      throw UsageError(a.in + ": " + e.what());
    }
  }();
  const auto& g = net.graph;
  auto need_site = [&](const char* what) {
    if (a.site < 0) throw UsageError(std::string("network ") + a.action + " needs --site (" + what + ")");
    return a.site;
  };
  auto print_network = [&](const Network& result) {
    if (c.text)
      std::cout << graph_dot(result.graph);
    else
      emit(network_json(result));
    return 0;
  };

  if (a.action == "response") {
    auto m = response_matrix(net);
    if (c.text) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t k = 0; k < m.cols(); ++k) std::cout << std::right << std::setw(10) << to_string(m(i, k));
        std::cout << '\n';
      }
    } else {
      emit(Json{{"n", g.n()}, {"response", matrix_json(m)}});
    }
    return 0;
  }
  if (a.action == "minors" || a.action == "pi") {
    auto m = response_matrix(net);
    Json rows = Json::array();
    for (const auto& p : circular_pairs(g.n())) {
      bool connected = has_connection(g, p);
      if (a.action == "pi" && !connected) continue;
      Json row = pair_json(p);
      row["connected"] = connected;
      if (a.action == "minors") row["minor"] = to_string(circular_minor(m, p));
      rows.push_back(row);
    }
    if (c.text) {
      for (const auto& row : rows)
        std::cout << std::left << std::setw(16) << row["label"].get<std::string>()
                  << (row.contains("minor") ? row["minor"].get<std::string>() : "") << '\n';
    } else {
      emit(Json{{"n", g.n()}, {a.action, rows}});
    }
    return 0;
  }
  if (a.action == "axioms") {
    auto r = verify_response_axioms(net);
    Json out{{"symmetric", r.symmetric},
             {"zero_row_sums", r.zero_row_sums},
             {"minors_nonnegative", r.minors_nonnegative},
             {"positivity_matches_connections", r.positivity_matches_connections},
             {"pairs_checked", r.pairs_checked},
             {"violations", r.violations},
             {"pass", r.pass}};
    if (c.text)
      std::cout << (r.pass ? "pass" : "FAIL") << " (" << r.pairs_checked << " circular pairs)\n";
    else
      emit(out);
    return r.pass ? 0 : kExitCheck;
  }
  if (a.action == "critical") {
    bool crit = is_critical(g);
    if (c.text)
      std::cout << (crit ? "critical" : "not critical") << '\n';
    else
      emit(Json{{"critical", crit}});
    return crit ? 0 : kExitCheck;
  }
  if (a.action == "medial") {
    auto r = medial_matching(g);
    if (c.text) {
      std::cout << (r.matching ? to_string(*r.matching) : "not lensless: " + r.diagnostic) << '\n';
    } else {
      Json out{{"lensless", r.matching.has_value()}};
      if (r.matching) out["matching"] = matching_json(*r.matching);
      else out["diagnostic"] = r.diagnostic;
      emit(out);
    }
    return r.matching ? 0 : kExitCheck;
  }
  if (a.action == "dot") {
    std::cout << graph_dot(g);
    return 0;
  }
  try {
    if (a.action == "ydelta") return print_network(y_delta(net, need_site("hub vertex")));
    if (a.action == "deltay") {
      if (a.triangle.size() != 3) throw UsageError("network deltay needs --triangle a,b,c");
      return print_network(delta_y(net, a.triangle[0], a.triangle[1], a.triangle[2]));
    }
    if (a.action == "contract") return print_network(contract_edge(net, need_site("edge")));
    if (a.action == "delete") return print_network(delete_edge(net, need_site("edge")));
    if (a.action == "reduce") {
      static const std::map<std::string, Reduction> rules = {
          {"self-loop", Reduction::self_loop}, {"spike", Reduction::spike}, {"parallel", Reduction::parallel}, {"series", Reduction::series}};
      auto it = rules.find(a.rule);
      if (it == rules.end()) throw UsageError("network reduce needs --rule self-loop|spike|parallel|series");
      return print_network(reduce(net, it->second, need_site("edge or vertex")));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "electra: " << e.what() << '\n';
    return kExitCheck;
  }
  throw UsageError("unknown network action '" + a.action + "'");
}

// ---------------------------------------------------------------- recover

struct RecoverArgs {
  std::string in;
  std::vector<int> partner;
  std::string dot_out;
};

int run_recover(const RecoverArgs& a, const Common& c) {
  if (a.in.empty() == a.partner.empty()) throw UsageError("recover needs exactly one of --in and --partner");
  Matching m = [&] {
    try {
      if (!a.in.empty()) return matching_from_json(read_json(a.in));
      return Matching(static_cast<int>(a.partner.size() / 2), a.partner);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  CircularPlanarGraph g;
  try {
    g = recover_graph(m);
  } catch (const PreconditionError& e) {
    std::cerr << "electra: " << e.what() << '\n';
    return kExitCheck;
  }
  auto dot = graph_dot(g, "recovered");
  if (!a.dot_out.empty()) {
    std::ofstream f(a.dot_out);
    if (!f) throw UsageError("cannot write " + a.dot_out);
    f << dot;
  }
  if (c.text)
    std::cout << dot;
  else
    emit(Json{{"matching", matching_json(m)}, {"network", network_json(unit_network(g))}, {"dot", dot}});
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  AcceptanceOptions opts;
  std::vector<int> criteria;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  std::vector<int> ids = a.criteria;
  if (ids.empty())
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  Json out{{"max_n", a.opts.max_n}, {"seed", a.opts.seed}, {"extended", a.opts.extended}};
  out["criteria"] = Json::array();
  bool all = true;
  for (int id : ids) {
    auto start = std::chrono::steady_clock::now();
    auto r = run_criterion(id, a.opts);
    std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::cerr << summary_line(r) << "  [" << std::fixed << std::setprecision(2) << took.count() << " s]\n";
    out["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (c.text) std::cout << summary_line(r) << '\n';
    all = all && r.pass;
  }
  out["pass"] = all;
  if (!c.text) emit(out);
  return all ? 0 : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular planar electrical networks: the poset EP_n, its enumeration, and exact network computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--text", common.text, "plain-text output instead of JSON");
  app.add_flag("--allow-large", common.allow_large, "lift the default size guards (n <= 6 posets, n <= 8 enumerations)");

  PosetArgs pa;
  auto* poset = app.add_subcommand("poset", "build EP_n, run checks, export");
  poset->add_option("-n,--n", pa.n, "order")->required();
  poset->add_option("--check", pa.checks, "comma list of graded, diamond, eulerian, unimodal");
  poset->add_option("--format", pa.format, "export the cover graph as dot or json");

  CountArgs ca;
  auto* count = app.add_subcommand("count", "X_n by recurrence and/or brute force");
  count->add_option("-n,--n", ca.n, "order")->required();
  count->add_option("--method", ca.method, "recurrence, bruteforce or both")->check(CLI::IsMember({"recurrence", "bruteforce", "both"}));
  count->add_flag("--csv", ca.csv, "the sequence X_1..X_n as CSV");

  RankGfArgs ra;
  auto* rankgf = app.add_subcommand("rankgf", "rank generating function of EP_n");
  rankgf->add_option("-n,--n", ra.n, "order")->required()->check(CLI::PositiveNumber);
  rankgf->add_option("--method", ra.method, "poset, mobius, bivariate or all")
      ->check(CLI::IsMember({"poset", "mobius", "bivariate", "all"}));
  rankgf->add_flag("--touchard", ra.touchard, "also the crossing polynomial of all matchings");
  rankgf->add_flag("--highrank", ra.highrank, "compare the top n ranks with their closed forms");

  AsymptoticsArgs aa;
  auto* asym = app.add_subcommand("asymptotics", "ratio bounds and densities up to N");
  asym->add_option("-N,--N", aa.N, "largest n");
  asym->add_flag("--gf", aa.gf, "include the [t^(n-1)] X(t)^n identity");
  asym->add_option("--lambda", aa.lambda, "include the lambda-analogue sequence");

  NetworkArgs na;
  auto* network = app.add_subcommand("network", "computations on a network JSON file");
  network->add_option("action", na.action, "response, minors, pi, axioms, critical, medial, dot, ydelta, deltay, reduce, contract, delete")
      ->required()
      ->check(CLI::IsMember({"response", "minors", "pi", "axioms", "critical", "medial", "dot", "ydelta", "deltay", "reduce", "contract", "delete"}));
  network->add_option("--in", na.in, "network JSON")->required();
  network->add_option("--site", na.site, "vertex or edge index the move acts on");
  network->add_option("--triangle", na.triangle, "three boundary-order vertices for deltay")->delimiter(',');
  network->add_option("--rule", na.rule, "reduction rule");

  RecoverArgs rca;
  auto* recover = app.add_subcommand("recover", "critical graph with a given full medial matching");
  recover->add_option("--in", rca.in, "matching JSON");
  recover->add_option("--partner", rca.partner, "partner array, comma separated")->delimiter(',');
  recover->add_option("--dot", rca.dot_out, "also write the DOT drawing to this file");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--max-n", va.opts.max_n, "order bound")->check(CLI::Range(1, 6));
  verify->add_option("--seed", va.opts.seed, "seed for randomized criteria");
  verify->add_flag("--extended", va.opts.extended, "include the n = 6 Eulerian check");
  verify->add_option("--criterion", va.criteria, "criteria to run")->check(CLI::Range(1, kCriterionCount))->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poset) return run_poset(pa, common);
    if (*count) return run_count(ca, common);
    if (*rankgf) return run_rankgf(ra, common);
    if (*asym) return run_asymptotics(aa, common);
    if (*network) return run_network(na, common);
    if (*recover) return run_recover(rca, common);
    return run_verify(va, common);
  } catch (const UsageError& e) {
    std::cerr << "electra: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    std::cerr << "electra: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "electra: " << e.what() << '\n';
    return kExitUsage;
  }
}
