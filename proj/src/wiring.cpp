#include "electra/wiring.hpp"

#include "electra/algebra.hpp"

#include <algorithm>

namespace electra {

Matching::Matching(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {
  if (n < 1) throw std::invalid_argument("matching order must be >= 1");
  if (partner_.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("matching of order " + std::to_string(n) + " needs " + std::to_string(2 * n) +
                                " partner entries");
  for (int i = 0; i < 2 * n; ++i) {
    int j = partner_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= 2 * n) throw std::invalid_argument("partner index out of range at point " + std::to_string(i));
    if (j == i) throw std::invalid_argument("matching has a fixed point at " + std::to_string(i));
    if (partner_[static_cast<std::size_t>(j)] != i) throw std::invalid_argument("partner array is not an involution");
  }
}

Matching Matching::hugging(int n) {
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(2 * i)] = 2 * i + 1;
    p[static_cast<std::size_t>(2 * i + 1)] = 2 * i;
  }
  return Matching(n, std::move(p));
}

Matching Matching::antipodal(int n) {
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) p[static_cast<std::size_t>(i)] = (i + n) % (2 * n);
  return Matching(n, std::move(p));
}

std::vector<std::pair<int, int>> Matching::wires() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 2 * n_; ++i)
    if (i < partner_[static_cast<std::size_t>(i)]) out.emplace_back(i, partner_[static_cast<std::size_t>(i)]);
  return out;
}

std::string point_name(int point) { return (point % 2 == 0 ? "A" : "B") + std::to_string(point / 2 + 1); }

std::string to_string(const Matching& m) {
  std::string out = "{";
  bool first = true;
  for (auto [a, b] : m.wires()) {
    if (!first) out += ", ";
    first = false;
    out += point_name(a) + "-" + point_name(b);
  }
  return out + "}";
}

std::string_view to_string(Resolution r) { return r == Resolution::A ? "A" : "B"; }

Crossing make_crossing(std::pair<int, int> w1, std::pair<int, int> w2) {
  int a = std::min(w1.first, w1.second), b = std::max(w1.first, w1.second);
  int c = std::min(w2.first, w2.second), d = std::max(w2.first, w2.second);
  if (c < a) {
    std::swap(a, c);
    std::swap(b, d);
  }
  if (!(a < c && c < b && b < d)) throw MoveError("wires do not cross");
  return {a, b, c, d};
}

std::vector<Crossing> crossings(const Matching& m) {
  std::vector<Crossing> out;
  auto ws = m.wires();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      auto [a, b] = ws[i];
      auto [c, d] = ws[j];
      if (a < c && c < b && b < d) out.push_back({a, b, c, d});
    }
  return out;
}

int crossing_count(const Matching& m) {
  int count = 0;
  auto ws = m.wires();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (ws[j].first < ws[i].second && ws[i].second < ws[j].second) ++count;
  return count;
}

namespace {

// Side of chord V_i V_j (i < j) is the point interval [2i-1, 2j-2]. A chord is a
// dividing line iff that interval is closed under the partner map. Scans every
// chord whose interval ends at r.
std::optional<std::pair<int, int>> closed_interval_ending_at(const std::vector<int>& partner, int r) {
  if (r % 2 != 0 || r < 2) return std::nullopt;
  int lo = partner[static_cast<std::size_t>(r)], hi = lo;
  for (int l = r - 1; l >= 1; --l) {
    int p = partner[static_cast<std::size_t>(l)];
    lo = std::min(lo, p);
    hi = std::max(hi, p);
    if (l % 2 == 1 && lo >= l && hi <= r) return std::pair{(l + 1) / 2, (r + 2) / 2};
  }
  return std::nullopt;
}

template <class Emit>
void full_rec(std::vector<int>& partner, int lowest, int n, Emit& emit) {
  const int size = 2 * n;
  for (int q = lowest + 1; q < size; ++q) {
    if (partner[static_cast<std::size_t>(q)] != -1) continue;
    partner[static_cast<std::size_t>(lowest)] = q;
    partner[static_cast<std::size_t>(q)] = lowest;
    int next = lowest + 1;
    while (next < size && partner[static_cast<std::size_t>(next)] != -1) ++next;
    // every point below `next` is now decided; reject early on a dividing line
    bool dividing = false;
    for (int r = lowest; r < next && !dividing; ++r) dividing = closed_interval_ending_at(partner, r).has_value();
    if (!dividing) {
      if (next == size)
        emit(partner);
      else
        full_rec(partner, next, n, emit);
    }
    partner[static_cast<std::size_t>(lowest)] = -1;
    partner[static_cast<std::size_t>(q)] = -1;
  }
}

}  // namespace

std::optional<std::pair<int, int>> first_dividing_line(const Matching& m) {
  for (int r = 2; r < 2 * m.n(); r += 2)
    if (auto line = closed_interval_ending_at(m.partners(), r)) return line;
  return std::nullopt;
}

bool is_full(const Matching& m) { return !first_dividing_line(m).has_value(); }

Matching uncross(const Matching& m, const Crossing& c, Resolution mode) {
  auto p = m.partners();
  auto at = [&](int i) -> int& { return p.at(static_cast<std::size_t>(i)); };
  if (c.a < 0 || c.d >= 2 * m.n() || at(c.a) != c.b || at(c.c) != c.d || !(c.a < c.c && c.c < c.b && c.b < c.d))
    throw MoveError("not a crossing of this matching");
  auto wire = [&](int x, int y) {
    at(x) = y;
    at(y) = x;
  };
  if (mode == Resolution::A) {
    wire(c.a, c.c);
    wire(c.b, c.d);
  } else {
    wire(c.a, c.d);
    wire(c.c, c.b);
  }
  return Matching(m.n(), std::move(p));
}

std::vector<LegalMove> legal_moves(const Matching& m) {
  if (auto line = first_dividing_line(m))
    throw PreconditionError("legal_moves needs a full matching; dividing line V" + std::to_string(line->first) + "V" +
                            std::to_string(line->second));
  std::vector<LegalMove> out;
  for (const auto& c : crossings(m))
    for (Resolution mode : {Resolution::A, Resolution::B}) {
      Matching r = uncross(m, c, mode);
      if (is_full(r)) out.push_back({c, mode, std::move(r)});
    }
  return out;
}

namespace {

void check_full_order(const char* who, int n, bool allow_large) {
  const int limit = allow_large ? kMaxFullOrderLarge : kMaxFullOrder;
  if (n < 1 || n > limit)
    throw SizeError(std::string(who) + ": n must lie in [1, " + std::to_string(limit) + "]" +
                    (allow_large ? "" : " (n = 9 needs the large flag)"));
}

}  // namespace

std::vector<Matching> enumerate_full(int n, bool allow_large) {
  check_full_order("enumerate_full", n, allow_large);
  std::vector<Matching> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  auto emit = [&](const std::vector<int>& p) { out.emplace_back(n, p); };
  full_rec(partner, 0, n, emit);
  return out;
}

std::uint64_t count_full(int n, bool allow_large) {
  check_full_order("count_full", n, allow_large);
  std::uint64_t count = 0;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  auto emit = [&](const std::vector<int>&) { ++count; };
  full_rec(partner, 0, n, emit);
  return count;
}

std::string canonical_key(const Matching& m) {
  std::string key;
  key.reserve(m.partners().size());
  for (int p : m.partners()) key.push_back(static_cast<char>(p));
  return key;
}

Matching decode_key(std::string_view key) {
  if (key.empty() || key.size() % 2 != 0) throw std::invalid_argument("matching key has odd or zero length");
  std::vector<int> p;
  p.reserve(key.size());
  for (char c : key) p.push_back(static_cast<unsigned char>(c));
  return Matching(static_cast<int>(key.size() / 2), std::move(p));
}

}  // namespace electra
