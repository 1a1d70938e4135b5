#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace cbwt::detail {

// B+-tree over fixed-capacity leaves. Internal nodes cache one summary per
// child so positional descents and aggregate queries touch O(depth) nodes.
//
// Leaf must provide: Value, Summary (with .size and static combine/identity/single),
// kCapacity, size(), get(), set(), insert(), erase(), split_into(), summary().
template <class Leaf>
class ChunkTree {
 public:
  using Value = typename Leaf::Value;
  using Summary = typename Leaf::Summary;
  static constexpr std::size_t kMaxChildren = 32;

  struct Node {
    std::unique_ptr<Leaf> leaf;  // non-null iff leaf node
    std::vector<std::unique_ptr<Node>> children;
    std::vector<Summary> sums;

    bool is_leaf() const { return leaf != nullptr; }

    Summary summary() const {
      if (leaf) return leaf->summary();
      Summary s = Summary::identity();
      for (const auto& x : sums) s = Summary::combine(s, x);
      return s;
    }
  };

  ChunkTree() : root_(make_leaf_node()) {}

  // Bulk load from count values produced by gen(i), leaves filled to 3/4.
  template <class Gen>
  ChunkTree(std::size_t count, Gen gen) {
    const std::size_t fill = std::max<std::size_t>(1, Leaf::kCapacity * 3 / 4);
    std::vector<std::unique_ptr<Node>> level;
    for (std::size_t at = 0; at < count; at += fill) {
      auto node = make_leaf_node();
      const std::size_t end = std::min(count, at + fill);
      for (std::size_t i = at; i < end; ++i) node->leaf->insert(i - at, gen(i));
      level.push_back(std::move(node));
    }
    const std::size_t fan = kMaxChildren * 3 / 4;
    while (level.size() > 1) {
      std::vector<std::unique_ptr<Node>> up;
      for (std::size_t at = 0; at < level.size(); at += fan) {
        auto node = std::make_unique<Node>();
        const std::size_t end = std::min(level.size(), at + fan);
        for (std::size_t i = at; i < end; ++i) {
          node->sums.push_back(level[i]->summary());
          node->children.push_back(std::move(level[i]));
        }
        up.push_back(std::move(node));
      }
      level = std::move(up);
    }
    root_ = level.empty() ? make_leaf_node() : std::move(level.front());
    size_ = count;
  }

  ChunkTree(const ChunkTree& other) : root_(clone(*other.root_)), size_(other.size_) {}
  ChunkTree& operator=(const ChunkTree& other) {
    if (this != &other) {
      root_ = clone(*other.root_);
      size_ = other.size_;
    }
    return *this;
  }
  ChunkTree(ChunkTree&&) noexcept = default;
  ChunkTree& operator=(ChunkTree&&) noexcept = default;

  std::size_t size() const { return size_; }
  const Node& root() const { return *root_; }
  Summary summary() const { return root_->summary(); }

  Value get(std::size_t pos) const {
    const Node* node = root_.get();
    while (!node->is_leaf()) {
      std::size_t idx = 0;
      while (pos >= node->sums[idx].size) pos -= node->sums[idx++].size;
      node = node->children[idx].get();
    }
    return node->leaf->get(pos);
  }

  void set(std::size_t pos, Value v) { set_rec(*root_, pos, v); }

  void insert(std::size_t pos, Value v) {
    auto sibling = insert_rec(*root_, pos, v);
    if (sibling) {
      auto top = std::make_unique<Node>();
      top->sums.push_back(root_->summary());
      top->sums.push_back(sibling->summary());
      top->children.push_back(std::move(root_));
      top->children.push_back(std::move(sibling));
      root_ = std::move(top);
    }
    ++size_;
  }

  // Empty leaves and nodes are unlinked; nothing is merged.
  Value erase(std::size_t pos) {
    Value v = erase_rec(*root_, pos);
    --size_;
    while (!root_->is_leaf() && root_->children.size() == 1) {
      auto child = std::move(root_->children.front());
      root_ = std::move(child);
    }
    if (!root_->is_leaf() && root_->children.empty()) root_ = make_leaf_node();
    return v;
  }

 private:
  static std::unique_ptr<Node> make_leaf_node() {
    auto node = std::make_unique<Node>();
    node->leaf = std::make_unique<Leaf>();
    return node;
  }

  static std::unique_ptr<Node> clone(const Node& src) {
    auto node = std::make_unique<Node>();
    if (src.leaf) {
      node->leaf = std::make_unique<Leaf>(*src.leaf);
      return node;
    }
    node->sums = src.sums;
    node->children.reserve(src.children.size());
    for (const auto& c : src.children) node->children.push_back(clone(*c));
    return node;
  }

  static void set_rec(Node& node, std::size_t pos, Value v) {
    if (node.is_leaf()) {
      node.leaf->set(pos, v);
      return;
    }
    std::size_t idx = 0;
    while (pos >= node.sums[idx].size) pos -= node.sums[idx++].size;
    set_rec(*node.children[idx], pos, v);
    node.sums[idx] = node.children[idx]->summary();
  }

  static std::unique_ptr<Node> insert_rec(Node& node, std::size_t pos, Value v) {
    if (node.is_leaf()) {
      Leaf& leaf = *node.leaf;
      if (leaf.size() < Leaf::kCapacity) {
        leaf.insert(pos, v);
        return nullptr;
      }
      auto sibling = make_leaf_node();
      leaf.split_into(*sibling->leaf);
      if (pos <= leaf.size()) {
        leaf.insert(pos, v);
      } else {
        sibling->leaf->insert(pos - leaf.size(), v);
      }
      return sibling;
    }
    std::size_t idx = 0;
    while (idx + 1 < node.children.size() && pos > node.sums[idx].size) {
      pos -= node.sums[idx++].size;
    }
    auto sibling = insert_rec(*node.children[idx], pos, v);
    if (!sibling) {
      node.sums[idx] = Summary::combine(node.sums[idx], Summary::single(v));
      return nullptr;
    }
    node.sums[idx] = node.children[idx]->summary();
    Summary s = sibling->summary();
    node.children.insert(node.children.begin() + idx + 1, std::move(sibling));
    node.sums.insert(node.sums.begin() + idx + 1, s);
    if (node.children.size() <= kMaxChildren) return nullptr;

    auto upper = std::make_unique<Node>();
    const std::size_t half = node.children.size() / 2;
    for (std::size_t i = half; i < node.children.size(); ++i) {
      upper->children.push_back(std::move(node.children[i]));
      upper->sums.push_back(node.sums[i]);
    }
    node.children.resize(half);
    node.sums.resize(half);
    return upper;
  }

  static Value erase_rec(Node& node, std::size_t pos) {
    if (node.is_leaf()) return node.leaf->erase(pos);
    std::size_t idx = 0;
    while (pos >= node.sums[idx].size) pos -= node.sums[idx++].size;
    Value v = erase_rec(*node.children[idx], pos);
    Summary s = node.children[idx]->summary();
    if (s.size == 0) {
      node.children.erase(node.children.begin() + idx);
      node.sums.erase(node.sums.begin() + idx);
    } else {
      node.sums[idx] = s;
    }
    return v;
  }

  std::unique_ptr<Node> root_;
  std::size_t size_ = 0;
};

}  // namespace cbwt::detail
