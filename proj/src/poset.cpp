#include "electra/poset.hpp"

#include "electra/algebra.hpp"
#include "electra/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>

namespace electra {

Poset::Poset(std::vector<int> rank, const std::vector<std::vector<std::size_t>>& below) : rank_(std::move(rank)) {
  const std::size_t n = rank_.size();
  if (below.size() != n) throw OrderError("generating relation size does not match element count");

  std::vector<std::vector<std::size_t>> gen(n);
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t y = 0; y < n; ++y) {
    gen[y] = below[y];
    std::sort(gen[y].begin(), gen[y].end());
    gen[y].erase(std::unique(gen[y].begin(), gen[y].end()), gen[y].end());
    for (std::size_t x : gen[y]) {
      if (x >= n) throw OrderError("generating relation refers to a missing element");
      if (x == y) throw OrderError("generating relation has a loop");
      above[x].push_back(y);
    }
  }

  std::vector<std::size_t> pending(n);
  std::deque<std::size_t> ready;
  for (std::size_t y = 0; y < n; ++y) {
    pending[y] = gen[y].size();
    if (pending[y] == 0) ready.push_back(y);
  }
  topo_.reserve(n);
  while (!ready.empty()) {
    std::size_t x = ready.front();
    ready.pop_front();
    topo_.push_back(x);
    for (std::size_t y : above[x])
      if (--pending[y] == 0) ready.push_back(y);
  }
  if (topo_.size() != n) throw OrderError("generating relation has a cycle");

  down_.assign(n, DynamicBitset(n));
  for (std::size_t y : topo_) {
    down_[y].set(y);
    for (std::size_t x : gen[y]) down_[y] |= down_[x];
  }

  covers_below_.assign(n, {});
  covers_above_.assign(n, {});
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x : gen[y]) {
      bool implied = std::any_of(gen[y].begin(), gen[y].end(), [&](std::size_t z) { return z != x && down_[z].test(x); });
      if (!implied) covers_below_[y].push_back(x);
    }
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x : covers_below_[y]) covers_above_[x].push_back(y);
}

std::size_t Poset::cover_count() const {
  std::size_t c = 0;
  for (const auto& v : covers_below_) c += v.size();
  return c;
}

DynamicBitset Poset::up_set(std::size_t x) const {
  DynamicBitset up(size());
  std::vector<std::size_t> stack{x};
  up.set(x);
  while (!stack.empty()) {
    std::size_t z = stack.back();
    stack.pop_back();
    for (std::size_t y : covers_above_[z])
      if (!up.test(y)) {
        up.set(y);
        stack.push_back(y);
      }
  }
  return up;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (covers_above_[x].empty()) out.push_back(x);
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (covers_below_[x].empty()) out.push_back(x);
  return out;
}

EPPoset::EPPoset(int n_, std::vector<Matching> els, Poset p) : n(n_), elements(std::move(els)), order(std::move(p)) {
  for (std::size_t i = 0; i < elements.size(); ++i) index_.emplace(canonical_key(elements[i]), i);
}

std::size_t EPPoset::index_of(const Matching& m) const {
  auto it = index_.find(canonical_key(m));
  if (it == index_.end()) throw std::out_of_range("matching " + to_string(m) + " is not an element of EP_" + std::to_string(n));
  return it->second;
}

std::size_t EPPoset::top() const { return index_of(Matching::antipodal(n)); }
std::size_t EPPoset::bottom() const { return index_of(Matching::hugging(n)); }

EPPoset build_ep(int n, bool allow_large) {
  const int limit = allow_large ? kMaxPosetOrderLarge : kMaxPosetOrder;
  if (n < 1 || n > limit)
    throw SizeError("build_ep: n must lie in [1, " + std::to_string(limit) + "]" +
                    (allow_large ? "" : " (n = 7 needs the large flag)"));
  std::vector<Matching> elements = enumerate_full(n);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(canonical_key(elements[i]), i);

  std::vector<int> rank(elements.size());
  std::vector<std::vector<std::size_t>> below(elements.size());
  parallel_for(elements.size(), [&](std::size_t i) {
    rank[i] = crossing_count(elements[i]);
    for (const auto& mv : legal_moves(elements[i])) below[i].push_back(index.at(canonical_key(mv.result)));
  });

  EPPoset ep(n, std::move(elements), Poset(std::move(rank), below));
  auto tops = ep.order.maximal_elements();
  auto bottoms = ep.order.minimal_elements();
  if (tops.size() != 1 || tops.front() != ep.top())
    throw ConsistencyError("EP_" + std::to_string(n) + " does not have the antipodal matching as unique top");
  if (bottoms.size() != 1 || bottoms.front() != ep.bottom())
    throw ConsistencyError("EP_" + std::to_string(n) + " does not have the hugging matching as unique bottom");
  return ep;
}

std::vector<std::size_t> rank_sizes(const EPPoset& p) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(p.n * (p.n - 1) / 2 + 1), 0);
  for (int r : p.order.ranks()) ++sizes.at(static_cast<std::size_t>(r));
  return sizes;
}

GradedReport check_graded(const Poset& p) {
  GradedReport rep{true, 0, {}};
  for (std::size_t y = 0; y < p.size(); ++y)
    for (std::size_t x : p.covers_below(y)) {
      ++rep.covers_checked;
      if (p.rank(y) - p.rank(x) != 1) rep.violations.emplace_back(x, y);
    }
  rep.pass = rep.violations.empty();
  return rep;
}

std::vector<std::int64_t> mobius_row(const Poset& p, std::size_t x) {
  std::vector<std::int64_t> mu(p.size(), 0);
  const DynamicBitset up = p.up_set(x);
  for (std::size_t y : p.linear_extension()) {
    if (!up.test(y)) continue;
    if (y == x) {
      mu[y] = 1;
      continue;
    }
    std::int64_t sum = 0;
    p.down_set(y).for_each_and(up, [&](std::size_t z) { sum += mu[z]; });
    mu[y] = -sum;  // mu[y] itself is still 0 inside the sum
  }
  return mu;
}

std::int64_t mobius(const Poset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y)) throw OrderError("mobius: elements are not comparable as x <= y");
  return mobius_row(p, x)[y];
}

std::int64_t MobiusTable::operator()(std::size_t x, std::size_t y) {
  if (!poset_->leq(x, y)) throw OrderError("mobius: elements are not comparable as x <= y");
  auto it = rows_.find(x);
  if (it == rows_.end()) it = rows_.emplace(x, mobius_row(*poset_, x)).first;
  return it->second[y];
}

EulerianReport check_eulerian(const Poset& p) {
  std::vector<std::size_t> checked(p.size(), 0);
  std::vector<std::vector<IntervalReport>> bad(p.size());
  parallel_for(p.size(), [&](std::size_t x) {
    const auto mu = mobius_row(p, x);
    const DynamicBitset up = p.up_set(x);
    up.for_each([&](std::size_t y) {
      ++checked[x];
      const int len = p.rank(y) - p.rank(x);
      const std::int64_t expected = (len % 2 == 0) ? 1 : -1;
      if (mu[y] != expected) bad[x].push_back({x, y, len, p.down_set(y).count_and(up), mu[y]});
    });
  });
  EulerianReport rep{true, 0, {}};
  for (std::size_t x = 0; x < p.size(); ++x) {
    rep.intervals_checked += checked[x];
    rep.counterexamples.insert(rep.counterexamples.end(), bad[x].begin(), bad[x].end());
  }
  rep.pass = rep.counterexamples.empty();
  return rep;
}

DiamondReport check_diamond(const Poset& p) {
  std::vector<std::size_t> checked(p.size(), 0);
  std::vector<std::vector<IntervalReport>> bad(p.size());
  parallel_for(p.size(), [&](std::size_t x) {
    const DynamicBitset up = p.up_set(x);
    up.for_each([&](std::size_t z) {
      if (p.rank(z) - p.rank(x) != 2) return;
      ++checked[x];
      std::size_t size = p.down_set(z).count_and(up);
      if (size != 4) bad[x].push_back({x, z, 2, size, 0});
    });
  });
  DiamondReport rep{true, 0, {}};
  for (std::size_t x = 0; x < p.size(); ++x) {
    rep.intervals_checked += checked[x];
    rep.violations.insert(rep.violations.end(), bad[x].begin(), bad[x].end());
  }
  rep.pass = rep.violations.empty();
  return rep;
}

UnimodalReport check_unimodal(const std::vector<std::size_t>& sizes) {
  UnimodalReport rep{true, 0, sizes};
  if (sizes.empty()) return rep;
  rep.peak = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  for (std::size_t i = 0; i + 1 <= rep.peak; ++i)
    if (sizes[i] > sizes[i + 1]) rep.pass = false;
  for (std::size_t i = rep.peak; i + 1 < sizes.size(); ++i)
    if (sizes[i] < sizes[i + 1]) rep.pass = false;
  return rep;
}

ExportFormat parse_export_format(const std::string& name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw std::invalid_argument("unknown export format '" + name + "' (expected dot or json)");
}

void export_poset(const EPPoset& p, ExportFormat format, std::ostream& out) {
  const Poset& o = p.order;
  if (format == ExportFormat::json) {
    nlohmann::json j;
    j["n"] = p.n;
    j["elements"] = nlohmann::json::array();
    for (const auto& m : p.elements) j["elements"].push_back(m.partners());
    j["ranks"] = o.ranks();
    j["covers"] = nlohmann::json::array();
    for (std::size_t y = 0; y < o.size(); ++y)
      for (std::size_t x : o.covers_below(y)) j["covers"].push_back({x, y});
    out << j.dump() << '\n';
    return;
  }
  out << "digraph EP" << p.n << " {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  const int max_rank = p.n * (p.n - 1) / 2;
  for (int r = 0; r <= max_rank; ++r) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < o.size(); ++i)
      if (o.rank(i) == r) out << " e" << i << ";";
    out << " }\n";
  }
  for (std::size_t i = 0; i < o.size(); ++i)
    out << "  e" << i << " [label=\"" << to_string(p.elements[i]) << "\\nrank " << o.rank(i) << "\"];\n";
  for (std::size_t y = 0; y < o.size(); ++y)
    for (std::size_t x : o.covers_below(y)) out << "  e" << x << " -> e" << y << ";\n";
  out << "}\n";
}

EPPoset import_json(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  const int n = j.at("n").get<int>();
  std::vector<Matching> elements;
  for (const auto& e : j.at("elements")) elements.emplace_back(n, e.get<std::vector<int>>());
  auto ranks = j.at("ranks").get<std::vector<int>>();
  if (ranks.size() != elements.size()) throw std::invalid_argument("poset JSON: ranks and elements differ in length");
  std::vector<std::vector<std::size_t>> below(elements.size());
  for (const auto& c : j.at("covers")) {
    auto x = c.at(0).get<std::size_t>(), y = c.at(1).get<std::size_t>();
    if (y >= below.size()) throw std::invalid_argument("poset JSON: cover refers to a missing element");
    below[y].push_back(x);
  }
  return EPPoset(n, std::move(elements), Poset(std::move(ranks), below));
}

}  // namespace electra
