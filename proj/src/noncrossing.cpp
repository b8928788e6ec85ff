#include "electra/noncrossing.hpp"

#include "electra/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace electra {

NoncrossingPartition::NoncrossingPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::invalid_argument("noncrossing partition needs n >= 1");
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block in partition");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
    for (int x : blocks_[bi]) {
      if (x < 1 || x > n) throw std::invalid_argument("partition element out of range");
      if (owner[static_cast<std::size_t>(x)] != -1) throw std::invalid_argument("partition blocks overlap");
      owner[static_cast<std::size_t>(x)] = static_cast<int>(bi);
    }
  for (int x = 1; x <= n; ++x)
    if (owner[static_cast<std::size_t>(x)] == -1) throw std::invalid_argument("partition does not cover {1..n}");
  // a < b < c < d with a,c in one block and b,d in another
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          auto oa = owner[a], ob = owner[b], oc = owner[c], od = owner[d];
          if (oa == oc && ob == od && oa != ob) throw std::invalid_argument("partition is crossing");
        }
}

std::string to_string(const NoncrossingPartition& p) {
  std::string out;
  const bool wide = p.n() > 9;
  for (const auto& b : p.blocks()) {
    out += "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (wide && i) out += ",";
      out += std::to_string(b[i]);
    }
    out += "]";
  }
  return out;
}

namespace {

struct Interval {
  int lo, hi;  // inclusive; empty when lo > hi
};

void generate(std::vector<Interval> pending, std::vector<std::vector<int>>& blocks, int n,
              std::vector<NoncrossingPartition>& out) {
  while (!pending.empty() && pending.back().lo > pending.back().hi) pending.pop_back();
  if (pending.empty()) {
    out.emplace_back(n, blocks);
    return;
  }
  const Interval iv = pending.back();
  pending.pop_back();
  const int span = iv.hi - iv.lo;  // candidates lo+1 .. hi
  for (unsigned long mask = 0; mask < (1ul << span); ++mask) {
    std::vector<int> block{iv.lo};
    for (int k = 0; k < span; ++k)
      if (mask & (1ul << k)) block.push_back(iv.lo + 1 + k);
    std::vector<Interval> next = pending;
    // gaps pushed in reverse so the leftmost is expanded first
    std::vector<Interval> gaps;
    for (std::size_t i = 0; i + 1 < block.size(); ++i) gaps.push_back({block[i] + 1, block[i + 1] - 1});
    gaps.push_back({block.back() + 1, iv.hi});
    for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) next.push_back(*it);
    blocks.push_back(std::move(block));
    generate(std::move(next), blocks, n, out);
    blocks.pop_back();
  }
}

}  // namespace

std::vector<NoncrossingPartition> enumerate_noncrossing_partitions(int n) {
  if (n < 1 || n > kMaxNoncrossingOrder)
    throw SizeError("noncrossing partitions: n must lie in [1, " + std::to_string(kMaxNoncrossingOrder) + "]");
  std::vector<NoncrossingPartition> out;
  std::vector<std::vector<int>> blocks;
  generate({{1, n}}, blocks, n, out);
  return out;
}

std::vector<int> nc_regions(const NoncrossingPartition& p) {
  const int n = p.n();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // arcs i < j share a region iff no block straddles the cut {i+1..j}
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool separated = false;
      for (const auto& b : p.blocks()) {
        bool inside = false, outside = false;
        for (int x : b) (x > i && x <= j ? inside : outside) = true;
        if (inside && outside) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        int ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  std::vector<int> sizes;
  std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
  for (int a = 1; a <= n; ++a) {
    int r = find(a);
    if (slot[r] == -1) {
      slot[r] = static_cast<int>(sizes.size());
      sizes.push_back(0);
    }
    ++sizes[slot[r]];
  }
  return sizes;
}

}  // namespace electra
