#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#include "cbwt/detail/chunk_tree.hpp"

namespace cbwt::detail {

struct BitSummary {
  std::size_t size = 0;
  std::size_t ones = 0;
  static BitSummary identity() { return {}; }
  static BitSummary single(bool b) { return {1, b ? 1u : 0u}; }
  static BitSummary combine(BitSummary a, BitSummary b) { return {a.size + b.size, a.ones + b.ones}; }
};

inline std::uint64_t low_mask(unsigned bits) { return bits == 0 ? 0 : ~std::uint64_t{0} >> (64 - bits); }

// Position of the k-th (0-based) set bit of w; w must have more than k ones.
inline unsigned select_in_word(std::uint64_t w, unsigned k) {
  for (unsigned i = 0; i < k; ++i) w &= w - 1;
  return static_cast<unsigned>(std::countr_zero(w));
}

class BitLeaf {
 public:
  using Value = bool;
  using Summary = BitSummary;
  static constexpr std::size_t kWords = 16;
  static constexpr std::size_t kCapacity = kWords * 64;

  std::size_t size() const { return n_; }

  bool get(std::size_t pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1; }

  void set(std::size_t pos, bool b) {
    const std::uint64_t bit = std::uint64_t{1} << (pos & 63);
    if (b) {
      words_[pos >> 6] |= bit;
    } else {
      words_[pos >> 6] &= ~bit;
    }
  }

  void insert(std::size_t pos, bool b) {
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    for (std::size_t i = n_ >> 6; i > w; --i) words_[i] = (words_[i] << 1) | (words_[i - 1] >> 63);
    const std::uint64_t keep = words_[w] & low_mask(off);
    const std::uint64_t moved = (words_[w] & ~low_mask(off)) << 1;
    words_[w] = keep | moved | (std::uint64_t{b} << off);
    ++n_;
  }

  bool erase(std::size_t pos) {
    const bool b = get(pos);
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    const std::size_t last = (n_ - 1) >> 6;
    const std::uint64_t keep = words_[w] & low_mask(off);
    words_[w] = keep | ((words_[w] >> 1) & ~low_mask(off));
    for (std::size_t i = w + 1; i <= last; ++i) {
      words_[i - 1] |= (words_[i] & 1) << 63;
      words_[i] >>= 1;
    }
    --n_;
    return b;
  }

  void split_into(BitLeaf& upper) {
    const std::size_t half = n_ / 2;
    for (std::size_t i = half; i < n_; ++i) {
      upper.insert(i - half, get(i));
      set(i, false);
    }
    n_ = static_cast<std::uint32_t>(half);
  }

  std::size_t rank1(std::size_t pos) const {
    std::size_t r = 0;
    const std::size_t w = pos >> 6;
    for (std::size_t i = 0; i < w; ++i) r += std::popcount(words_[i]);
    if ((pos & 63) != 0) r += std::popcount(words_[w] & low_mask(pos & 63));
    return r;
  }

  std::size_t select1(std::size_t k) const {
    for (std::size_t i = 0;; ++i) {
      const auto c = static_cast<std::size_t>(std::popcount(words_[i]));
      if (k < c) return i * 64 + select_in_word(words_[i], static_cast<unsigned>(k));
      k -= c;
    }
  }

  std::size_t select0(std::size_t k) const {
    for (std::size_t i = 0;; ++i) {
      const auto c = static_cast<std::size_t>(std::popcount(~words_[i]));
      if (k < c) return i * 64 + select_in_word(~words_[i], static_cast<unsigned>(k));
      k -= c;
    }
  }

  Summary summary() const { return {n_, rank1(n_)}; }

 private:
  std::array<std::uint64_t, kWords> words_{};
  std::uint32_t n_ = 0;
};

// Dynamic bit vector; 0-based positions, rank over [0, pos), select by 0-based k.
class DynBitVector {
 public:
  DynBitVector() = default;
  template <class Gen>
  DynBitVector(std::size_t count, Gen gen) : tree_(count, gen) {}

  std::size_t size() const { return tree_.size(); }
  std::size_t ones() const { return tree_.summary().ones; }
  bool get(std::size_t pos) const { return tree_.get(pos); }
  void set(std::size_t pos, bool b) { tree_.set(pos, b); }
  void insert(std::size_t pos, bool b) { tree_.insert(pos, b); }
  bool erase(std::size_t pos) { return tree_.erase(pos); }

  std::size_t rank1(std::size_t pos) const {
    const auto* node = &tree_.root();
    std::size_t acc = 0;
    while (!node->is_leaf()) {
      std::size_t idx = 0;
      while (idx + 1 < node->children.size() && pos >= node->sums[idx].size) {
        pos -= node->sums[idx].size;
        acc += node->sums[idx].ones;
        ++idx;
      }
      node = node->children[idx].get();
    }
    return acc + node->leaf->rank1(pos);
  }

  std::size_t rank0(std::size_t pos) const { return pos - rank1(pos); }

  std::size_t select1(std::size_t k) const {
    const auto* node = &tree_.root();
    std::size_t pos = 0;
    while (!node->is_leaf()) {
      std::size_t idx = 0;
      while (k >= node->sums[idx].ones) {
        k -= node->sums[idx].ones;
        pos += node->sums[idx].size;
        ++idx;
      }
      node = node->children[idx].get();
    }
    return pos + node->leaf->select1(k);
  }

  std::size_t select0(std::size_t k) const {
    const auto* node = &tree_.root();
    std::size_t pos = 0;
    while (!node->is_leaf()) {
      std::size_t idx = 0;
      while (k >= node->sums[idx].size - node->sums[idx].ones) {
        k -= node->sums[idx].size - node->sums[idx].ones;
        pos += node->sums[idx].size;
        ++idx;
      }
      node = node->children[idx].get();
    }
    return pos + node->leaf->select0(k);
  }

 private:
  ChunkTree<BitLeaf> tree_;
};

}  // namespace cbwt::detail
