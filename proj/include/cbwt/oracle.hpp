#pragma once

// Brute-force reference implementations used by tests and `cbwt verify`.
// Everything here expands strings explicitly and sorts with quadratic
// comparisons; keep n small (kMaxSize).

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "cbwt/symbols.hpp"

namespace cbwt::oracle {

inline constexpr std::size_t kMaxSize = 64;

struct CartesianTree {
  struct Node {
    Symbol value;
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;
  };
  std::unique_ptr<Node> root;

  // Shape equality: strings ct-match iff their trees have the same shape.
  bool operator==(const CartesianTree& other) const;
};

CartesianTree build_cartesian_tree(std::span<const Symbol> v);

// Texts T_1..T_d; conjugate i is numbered by its start in T_1 T_2 ... T_d.
class TextCollection {
 public:
  explicit TextCollection(std::vector<SymbolString> texts);
  static TextCollection from_values(const std::vector<std::vector<std::uint32_t>>& texts);

  std::size_t size() const { return n_; }
  std::size_t text_count() const { return texts_.size(); }
  const SymbolString& text(std::size_t k) const { return texts_[k]; }
  const std::vector<SymbolString>& texts() const { return texts_; }
  std::size_t start(std::size_t k) const { return starts_[k]; }

  // (text index, 0-based offset) of conjugate i in [1..n].
  std::pair<std::size_t, std::size_t> locate_conjugate(std::size_t i) const;
  SymbolString conjugate(std::size_t i) const;

 private:
  std::vector<SymbolString> texts_;
  std::vector<std::size_t> starts_;
  std::size_t n_ = 0;
};

// Prefix of length len of v v v ...
SymbolString omega_prefix(std::span<const Symbol> v, std::size_t len);

std::weak_ordering omega_compare(std::span<const Symbol> v, std::span<const Symbol> u);

struct ConjugateArray {
  std::vector<std::size_t> ca;   // ca[i-1] = conjugate at lex rank i
  std::vector<std::size_t> ica;  // ica[j-1] = lex rank of conjugate j
};

ConjugateArray brute_conjugate_array(const TextCollection& tc);
std::vector<std::size_t> brute_prev(const TextCollection& tc);

struct BruteIndex {
  RtsString ft;
  RtsString lt;
  std::vector<std::size_t> lcp;
  std::vector<std::size_t> lf;
  std::vector<std::size_t> fl;
  ConjugateArray ca;
};

BruteIndex brute_index(const TextCollection& tc);

// Lex ranks [lo..hi] of conjugates whose infinite powers ct-match P on |P|
// symbols; hi < lo when empty.
std::pair<std::size_t, std::size_t> brute_crange(const TextCollection& tc, std::span<const Symbol> p);
std::size_t brute_count(const TextCollection& tc, std::span<const Symbol> p);
// Sorted conjugate ids.
std::vector<std::size_t> brute_locate(const TextCollection& tc, std::span<const Symbol> p);

}  // namespace cbwt::oracle
