#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "cbwt/detail/chunk_tree.hpp"

namespace cbwt::detail {

struct MinSummary {
  std::size_t size = 0;
  std::uint64_t min = std::numeric_limits<std::uint64_t>::max();
  static MinSummary identity() { return {}; }
  static MinSummary single(std::uint64_t v) { return {1, v}; }
  static MinSummary combine(MinSummary a, MinSummary b) { return {a.size + b.size, std::min(a.min, b.min)}; }
};

class MinLeaf {
 public:
  using Value = std::uint64_t;
  using Summary = MinSummary;
  static constexpr std::size_t kCapacity = 128;

  std::size_t size() const { return n_; }
  std::uint64_t get(std::size_t pos) const { return v_[pos]; }
  void set(std::size_t pos, std::uint64_t x) { v_[pos] = x; }

  void insert(std::size_t pos, std::uint64_t x) {
    std::copy_backward(v_.begin() + pos, v_.begin() + n_, v_.begin() + n_ + 1);
    v_[pos] = x;
    ++n_;
  }

  std::uint64_t erase(std::size_t pos) {
    const std::uint64_t x = v_[pos];
    std::copy(v_.begin() + pos + 1, v_.begin() + n_, v_.begin() + pos);
    --n_;
    return x;
  }

  void split_into(MinLeaf& upper) {
    const std::size_t half = n_ / 2;
    std::copy(v_.begin() + half, v_.begin() + n_, upper.v_.begin());
    upper.n_ = n_ - half;
    n_ = half;
  }

  Summary summary() const { return {n_, min_of(0, n_)}; }

  std::uint64_t min_of(std::size_t lo, std::size_t hi) const {
    std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = lo; i < hi; ++i) m = std::min(m, v_[i]);
    return m;
  }

 private:
  std::array<std::uint64_t, kCapacity> v_{};
  std::size_t n_ = 0;
};

// Dynamic integer sequence with subtree minima; 0-based positions.
class MinSeq {
 public:
  using Node = ChunkTree<MinLeaf>::Node;

  MinSeq() = default;
  template <class Gen>
  MinSeq(std::size_t count, Gen gen) : tree_(count, gen) {}

  std::size_t size() const { return tree_.size(); }
  std::uint64_t get(std::size_t pos) const { return tree_.get(pos); }
  void set(std::size_t pos, std::uint64_t x) { tree_.set(pos, x); }
  void insert(std::size_t pos, std::uint64_t x) { tree_.insert(pos, x); }
  std::uint64_t erase(std::size_t pos) { return tree_.erase(pos); }

  // Last index < end holding a value < c.
  std::optional<std::size_t> prev_less(std::size_t end, std::uint64_t c) const {
    if (end == 0) return std::nullopt;
    return prev_less_rec(tree_.root(), end, c);
  }

  // First index >= begin holding a value < c.
  std::optional<std::size_t> next_less(std::size_t begin, std::uint64_t c) const {
    if (begin >= size()) return std::nullopt;
    return next_less_rec(tree_.root(), begin, c);
  }

  // Minimum over [lo, hi); hi > lo.
  std::uint64_t range_min(std::size_t lo, std::size_t hi) const { return range_min_rec(tree_.root(), lo, hi); }

 private:
  static std::optional<std::size_t> prev_less_rec(const Node& node, std::size_t end, std::uint64_t c) {
    if (node.is_leaf()) {
      for (std::size_t i = end; i-- > 0;) {
        if (node.leaf->get(i) < c) return i;
      }
      return std::nullopt;
    }
    std::size_t idx = 0, start = 0;
    while (end > start + node.sums[idx].size) start += node.sums[idx++].size;
    if (node.sums[idx].min < c) {
      if (auto r = prev_less_rec(*node.children[idx], end - start, c)) return start + *r;
    }
    while (idx-- > 0) {
      start -= node.sums[idx].size;
      if (node.sums[idx].min < c) {
        return start + *prev_less_rec(*node.children[idx], node.sums[idx].size, c);
      }
    }
    return std::nullopt;
  }

  static std::optional<std::size_t> next_less_rec(const Node& node, std::size_t begin, std::uint64_t c) {
    if (node.is_leaf()) {
      for (std::size_t i = begin; i < node.leaf->size(); ++i) {
        if (node.leaf->get(i) < c) return i;
      }
      return std::nullopt;
    }
    std::size_t idx = 0, start = 0;
    while (begin >= start + node.sums[idx].size) start += node.sums[idx++].size;
    if (node.sums[idx].min < c) {
      if (auto r = next_less_rec(*node.children[idx], begin - start, c)) return start + *r;
    }
    for (start += node.sums[idx++].size; idx < node.children.size(); start += node.sums[idx++].size) {
      if (node.sums[idx].min < c) return start + *next_less_rec(*node.children[idx], 0, c);
    }
    return std::nullopt;
  }

  static std::uint64_t range_min_rec(const Node& node, std::size_t lo, std::size_t hi) {
    if (node.is_leaf()) return node.leaf->min_of(lo, hi);
    std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
    std::size_t start = 0;
    for (std::size_t idx = 0; idx < node.children.size() && start < hi; ++idx) {
      const std::size_t end = start + node.sums[idx].size;
      if (end > lo) {
        if (lo <= start && end <= hi) {
          m = std::min(m, node.sums[idx].min);
        } else {
          m = std::min(m, range_min_rec(*node.children[idx], std::max(lo, start) - start, std::min(hi, end) - start));
        }
      }
      start = end;
    }
    return m;
  }

  ChunkTree<MinLeaf> tree_;
};

}  // namespace cbwt::detail
