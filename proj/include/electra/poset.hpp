#pragma once

#include "electra/bitset.hpp"
#include "electra/wiring.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace electra {

struct OrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A finite poset with a rank label on every element.
///
/// Built from any acyclic generating relation; the order is its
/// reflexive-transitive closure and the covers are its transitive
/// reduction. Nothing assumes that covers move the rank label by one; that
/// is what check_graded verifies.
class Poset {
 public:
  /// `below[y]` lists elements x with x < y in the generating relation.
  Poset(std::vector<int> rank, const std::vector<std::vector<std::size_t>>& below);

  std::size_t size() const { return rank_.size(); }
  int rank(std::size_t x) const { return rank_[x]; }
  const std::vector<int>& ranks() const { return rank_; }

  /// Elements covered by y.
  const std::vector<std::size_t>& covers_below(std::size_t y) const { return covers_below_[y]; }
  /// Elements covering x.
  const std::vector<std::size_t>& covers_above(std::size_t x) const { return covers_above_[x]; }
  std::size_t cover_count() const;

  bool leq(std::size_t x, std::size_t y) const { return down_[y].test(x); }
  /// {z : z <= y}
  const DynamicBitset& down_set(std::size_t y) const { return down_[y]; }
  /// {z : z >= x}, computed on demand.
  DynamicBitset up_set(std::size_t x) const;

  /// Elements in a linear extension (every element after everything below it).
  const std::vector<std::size_t>& linear_extension() const { return topo_; }

  std::vector<std::size_t> maximal_elements() const;
  std::vector<std::size_t> minimal_elements() const;

 private:
  std::vector<int> rank_;
  std::vector<std::vector<std::size_t>> covers_below_;
  std::vector<std::vector<std::size_t>> covers_above_;
  std::vector<DynamicBitset> down_;
  std::vector<std::size_t> topo_;
};

constexpr int kMaxPosetOrder = 6;
constexpr int kMaxPosetOrderLarge = 7;

/// EP_n: full matchings of order n ordered by legal uncrossings.
struct EPPoset {
  int n;
  std::vector<Matching> elements;  ///< enumerate_full order
  Poset order;

  std::size_t index_of(const Matching& m) const;
  std::size_t top() const;
  std::size_t bottom() const;

 private:
  friend EPPoset build_ep(int, bool);
  friend EPPoset import_json(std::istream&);
  EPPoset(int n_, std::vector<Matching> els, Poset p);
  std::unordered_map<std::string, std::size_t> index_;
};

/// Throws SizeError outside 1 <= n <= 6 (7 with allow_large) and
/// ConsistencyError if the top or bottom is not unique.
EPPoset build_ep(int n, bool allow_large = false);

/// |EP_{n,r}| for r = 0 .. n(n-1)/2.
std::vector<std::size_t> rank_sizes(const EPPoset& p);

struct IntervalReport {
  std::size_t x, y;
  int length;
  std::size_t element_count;
  std::int64_t mobius;
};

struct GradedReport {
  bool pass;
  std::size_t covers_checked;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  ///< (lower, upper)
};

struct EulerianReport {
  bool pass;
  std::size_t intervals_checked;
  std::vector<IntervalReport> counterexamples;
};

struct DiamondReport {
  bool pass;
  std::size_t intervals_checked;
  std::vector<IntervalReport> violations;
};

struct UnimodalReport {
  bool pass;
  std::size_t peak;  ///< first index of the maximum
  std::vector<std::size_t> sizes;
};

GradedReport check_graded(const Poset& p);
EulerianReport check_eulerian(const Poset& p);
DiamondReport check_diamond(const Poset& p);
UnimodalReport check_unimodal(const std::vector<std::size_t>& rank_sizes);

/// mu(x, .) on the principal filter of x; entries outside it are zero.
std::vector<std::int64_t> mobius_row(const Poset& p, std::size_t x);

/// mu(x, y); throws OrderError unless x <= y.
std::int64_t mobius(const Poset& p, std::size_t x, std::size_t y);

/// Memoizes whole rows mu(x, .) keyed by x.
class MobiusTable {
 public:
  explicit MobiusTable(const Poset& p) : poset_(&p) {}
  std::int64_t operator()(std::size_t x, std::size_t y);

 private:
  const Poset* poset_;
  std::unordered_map<std::size_t, std::vector<std::int64_t>> rows_;
};

enum class ExportFormat { dot, json };

/// Throws std::invalid_argument for anything but "dot" or "json".
ExportFormat parse_export_format(const std::string& name);

void export_poset(const EPPoset& p, ExportFormat format, std::ostream& out);

/// Reads the JSON export back; covers become the generating relation.
EPPoset import_json(std::istream& in);

}  // namespace electra
