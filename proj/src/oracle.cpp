#include "cbwt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cbwt/encodings.hpp"

namespace cbwt::oracle {

namespace {

std::unique_ptr<CartesianTree::Node> build_range(std::span<const Symbol> v, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return nullptr;
  std::size_t m = lo;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    if (v[i] < v[m]) m = i;
  }
  auto node = std::make_unique<CartesianTree::Node>(CartesianTree::Node{v[m], nullptr, nullptr});
  node->left = build_range(v, lo, m);
  node->right = build_range(v, m + 1, hi);
  return node;
}

bool same_shape(const CartesianTree::Node* a, const CartesianTree::Node* b) {
  if (!a || !b) return a == b;
  return same_shape(a->left.get(), b->left.get()) && same_shape(a->right.get(), b->right.get());
}

}  // namespace

bool CartesianTree::operator==(const CartesianTree& other) const { return same_shape(root.get(), other.root.get()); }

CartesianTree build_cartesian_tree(std::span<const Symbol> v) { return CartesianTree{build_range(v, 0, v.size())}; }

TextCollection::TextCollection(std::vector<SymbolString> texts) : texts_(std::move(texts)) {
  for (const auto& t : texts_) {
    if (t.empty()) throw std::invalid_argument("empty text in collection");
    starts_.push_back(n_ + 1);
    n_ += t.size();
  }
}

TextCollection TextCollection::from_values(const std::vector<std::vector<std::uint32_t>>& texts) {
  std::vector<SymbolString> out;
  for (const auto& t : texts) out.push_back(to_symbols(t));
  return TextCollection(std::move(out));
}

std::pair<std::size_t, std::size_t> TextCollection::locate_conjugate(std::size_t i) const {
  std::size_t k = texts_.size() - 1;
  while (starts_[k] > i) --k;
  return {k, i - starts_[k]};
}

SymbolString TextCollection::conjugate(std::size_t i) const {
  const auto [k, r] = locate_conjugate(i);
  const auto& t = texts_[k];
  SymbolString out;
  for (std::size_t x = 0; x < t.size(); ++x) out.push_back(t[(r + x) % t.size()]);
  return out;
}

SymbolString omega_prefix(std::span<const Symbol> v, std::size_t len) {
  SymbolString out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(v[i % v.size()]);
  return out;
}

std::weak_ordering omega_compare(std::span<const Symbol> v, std::span<const Symbol> u) {
  const std::size_t z = std::max(v.size(), u.size());
  const PdString pv = parent_distance_encode(omega_prefix(v, 3 * z));
  const PdString pu = parent_distance_encode(omega_prefix(u, 3 * z));
  const auto c = std::lexicographical_compare_three_way(pv.begin(), pv.end(), pu.begin(), pu.end());
  if (c < 0) return std::weak_ordering::less;
  if (c > 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

ConjugateArray brute_conjugate_array(const TextCollection& tc) {
  const std::size_t n = tc.size();
  std::vector<SymbolString> conj(n + 1);
  for (std::size_t i = 1; i <= n; ++i) conj[i] = tc.conjugate(i);
  ConjugateArray out;
  out.ca.resize(n);
  std::iota(out.ca.begin(), out.ca.end(), std::size_t{1});
  std::stable_sort(out.ca.begin(), out.ca.end(),
                   [&](std::size_t a, std::size_t b) { return omega_compare(conj[a], conj[b]) < 0; });
  out.ica.resize(n);
  for (std::size_t r = 0; r < n; ++r) out.ica[out.ca[r] - 1] = r + 1;
  return out;
}

std::vector<std::size_t> brute_prev(const TextCollection& tc) {
  std::vector<std::size_t> prev(tc.size());
  for (std::size_t i = 1; i <= tc.size(); ++i) {
    const auto [k, r] = tc.locate_conjugate(i);
    const auto& t = tc.text(k);
    const SymbolString c = tc.conjugate(i);
    if (omega_compare(c, t) == 0) {
      prev[i - 1] = i - 1 + primitive_root_length(rotational_pd_encode(t));
    } else {
      prev[i - 1] = i - 1;
    }
  }
  return prev;
}

BruteIndex brute_index(const TextCollection& tc) {
  const std::size_t n = tc.size();
  BruteIndex out;
  out.ca = brute_conjugate_array(tc);
  const auto prev = brute_prev(tc);
  out.ft.reserve(n);
  out.lf.resize(n);
  out.fl.resize(n);
  out.lcp.assign(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t j = out.ca.ca[i - 1];
    out.ft.push_back(pi_head(tc.conjugate(j)));
    out.lf[i - 1] = out.ca.ica[prev[j - 1] - 1];
    if (i > 1) out.lcp[i - 1] = lcp_count(tc.conjugate(j), tc.conjugate(out.ca.ca[i - 2]));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    out.lt.push_back(out.ft[out.lf[i - 1] - 1]);
    out.fl[out.lf[i - 1] - 1] = i;
  }
  return out;
}

namespace {

bool matches(const TextCollection& tc, std::size_t conj, const PdString& pd_p) {
  return parent_distance_encode(omega_prefix(tc.conjugate(conj), pd_p.size())) == pd_p;
}

}  // namespace

std::pair<std::size_t, std::size_t> brute_crange(const TextCollection& tc, std::span<const Symbol> p) {
  const PdString pd_p = parent_distance_encode(p);
  const auto ca = brute_conjugate_array(tc);
  std::size_t lo = 1, hi = 0;
  for (std::size_t r = 1; r <= tc.size(); ++r) {
    if (!matches(tc, ca.ca[r - 1], pd_p)) continue;
    if (hi < lo) lo = r;
    hi = r;
  }
  return {lo, hi};
}

std::size_t brute_count(const TextCollection& tc, std::span<const Symbol> p) { return brute_locate(tc, p).size(); }

std::vector<std::size_t> brute_locate(const TextCollection& tc, std::span<const Symbol> p) {
  const PdString pd_p = parent_distance_encode(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= tc.size(); ++i) {
    if (matches(tc, i, pd_p)) out.push_back(i);
  }
  return out;
}

}  // namespace cbwt::oracle
