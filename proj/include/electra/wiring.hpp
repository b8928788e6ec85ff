#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace electra {

/// A wiring diagram up to motion equivalence: a fixed-point-free involution
/// on the 2n medial boundary points.
///
/// Points are laid out clockwise as A_1, V_1, B_1, A_2, V_2, B_2, ... where
/// V_i are the boundary vertices (not points of the matching); A_i has index
/// 2i-2 and B_i has index 2i-1.
class Matching {
 public:
  /// Throws std::invalid_argument unless `partner` is a fixed-point-free
  /// involution on {0 .. 2n-1}.
  Matching(int n, std::vector<int> partner);

  /// Every A_i wired to B_i; the empty network.
  static Matching hugging(int n);
  /// Point i wired to point i+n; every pair of wires crosses.
  static Matching antipodal(int n);

  int n() const { return n_; }
  int partner(int point) const { return partner_.at(static_cast<std::size_t>(point)); }
  const std::vector<int>& partners() const { return partner_; }

  /// Wires as (a, b) with a < b, ordered by a.
  std::vector<std::pair<int, int>> wires() const;

  friend bool operator==(const Matching& a, const Matching& b) = default;
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.partner_ <=> b.partner_;
  }

 private:
  int n_;
  std::vector<int> partner_;
};

/// "A1", "B3", ... for a medial point index.
std::string point_name(int point);

/// "{A1-A2, B1-B2}"
std::string to_string(const Matching& m);

/// Two interleaving wires (a, b) and (c, d), normalized so that the points
/// read a, c, b, d clockwise starting from the smallest index a.
struct Crossing {
  int a, b, c, d;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// The two non-crossing ways of breaking a crossing.
enum class Resolution {
  A,  ///< {(a, c), (b, d)}
  B,  ///< {(a, d), (c, b)}
};

std::string_view to_string(Resolution r);

struct MoveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Builds the normalized crossing of two wires; throws MoveError if the
/// wires do not interleave.
Crossing make_crossing(std::pair<int, int> w1, std::pair<int, int> w2);

/// All crossings, ordered by (a, c).
std::vector<Crossing> crossings(const Matching& m);

/// Number of interleaving wire pairs; equals the rank in EP_n for full m.
int crossing_count(const Matching& m);

/// First dividing line V_i V_j (1-based, i < j) in (j, i) scan order, if any.
std::optional<std::pair<int, int>> first_dividing_line(const Matching& m);

/// True iff every chord V_i V_j is crossed by some wire.
bool is_full(const Matching& m);

/// Replaces the two wires of `c`; throws MoveError if `c` is not a crossing of m.
Matching uncross(const Matching& m, const Crossing& c, Resolution mode);

struct LegalMove {
  Crossing crossing;
  Resolution mode;
  Matching result;
};

/// Uncrossings whose result is again full, ordered by crossing then mode.
/// Throws PreconditionError if m is not full.
std::vector<LegalMove> legal_moves(const Matching& m);

constexpr int kMaxFullOrder = 8;
constexpr int kMaxFullOrderLarge = 9;

/// Every full matching of order n exactly once, in lexicographic order of
/// the partner array. n = 9 requires `allow_large`.
std::vector<Matching> enumerate_full(int n, bool allow_large = false);

/// |enumerate_full(n)| without materializing the list.
std::uint64_t count_full(int n, bool allow_large = false);

/// Calls `visit` for every matching of order n (full or not), in
/// lexicographic order of the partner array.
template <class Visit>
void for_each_matching(int n, Visit&& visit);

/// One byte per point: the partner array. Injective on matchings.
std::string canonical_key(const Matching& m);
Matching decode_key(std::string_view key);

// ---------------------------------------------------------------------------

namespace detail {
template <class Visit>
void matchings_rec(std::vector<int>& partner, int lowest, int n, Visit& visit) {
  const int size = 2 * n;
  while (lowest < size && partner[static_cast<std::size_t>(lowest)] != -1) ++lowest;
  if (lowest == size) {
    visit(Matching(n, partner));
    return;
  }
  for (int q = lowest + 1; q < size; ++q) {
    if (partner[static_cast<std::size_t>(q)] != -1) continue;
    partner[static_cast<std::size_t>(lowest)] = q;
    partner[static_cast<std::size_t>(q)] = lowest;
    matchings_rec(partner, lowest + 1, n, visit);
    partner[static_cast<std::size_t>(lowest)] = -1;
    partner[static_cast<std::size_t>(q)] = -1;
  }
}
}  // namespace detail

template <class Visit>
void for_each_matching(int n, Visit&& visit) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  detail::matchings_rec(partner, 0, n, visit);
}

}  // namespace electra
