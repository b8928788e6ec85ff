#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace electra {

/// A noncrossing partition of {1..n}. Blocks are sorted internally and
/// ordered by their smallest element.
class NoncrossingPartition {
 public:
  /// Validates disjointness, coverage of {1..n} and the noncrossing condition.
  NoncrossingPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// "[1][23][4]"-style rendering (elements > 9 are comma separated).
std::string to_string(const NoncrossingPartition& p);

constexpr int kMaxNoncrossingOrder = 12;

/// Every element of NC_n exactly once, in a fixed recursive order.
/// Throws SizeError outside 1 <= n <= 12.
std::vector<NoncrossingPartition> enumerate_noncrossing_partitions(int n);

/// Wiring regions cut out by the block chords, in order of their first arc.
///
/// Arc i is the stretch of circle between V_i and V_(i+1) (cyclically) and
/// carries the two medial points B_i, A_(i+1). The returned value for a
/// region is its number of arcs, i.e. half its medial-point count.
std::vector<int> nc_regions(const NoncrossingPartition& p);

}  // namespace electra
