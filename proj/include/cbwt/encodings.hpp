#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cbwt/symbols.hpp"

namespace cbwt {

// PD[i] = infinity for a strict new minimum, $ for $, else the distance to
// the nearest earlier position holding a value <= V[i].
PdString parent_distance_encode(std::span<const Symbol> v);

// Suffix of length |V| of PD(V V).
PdString rotational_pd_encode(std::span<const Symbol> v);

// Full rotational signature, evaluated position by position.
RtsString rts_encode(std::span<const Symbol> v);

// First symbol of rts_encode(v): the strict prefix minima of v[2..] v[1]
// that precede the first $ and are >= v[1]; $ when v[1] is $.
PiValue pi_head(std::span<const Symbol> v);

std::size_t infinity_count(std::span<const PdSymbol> pd);

// Infinity symbols of PD(u) inside the longest common prefix of PD(u) and PD(w).
std::size_t lcp_count(std::span<const Symbol> u, std::span<const Symbol> w);

// Per-suffix values for backward search, 1-based: h(i) = pi(P[i..] $) and
// e(i) = number of infinities in PD(P[i..]).
class PatternContext {
 public:
  PatternContext(std::vector<std::uint64_t> h, std::vector<std::size_t> e) : h_(std::move(h)), e_(std::move(e)) {}
  std::size_t size() const { return h_.size(); }
  std::uint64_t h(std::size_t i) const { return h_[i - 1]; }
  std::size_t e(std::size_t i) const { return e_[i - 1]; }

 private:
  std::vector<std::uint64_t> h_;
  std::vector<std::size_t> e_;
};

PatternContext preprocess_pattern(std::span<const Symbol> p);
PatternContext preprocess_pattern(std::span<const std::uint32_t> p);

// Smallest p dividing |x| with x = x[..p]^(|x|/p).
template <class T>
std::size_t primitive_root_length(std::span<const T> x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("primitive_root_length of empty string");
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && !(x[i] == x[k])) k = fail[k];
    if (x[i] == x[k]) ++k;
    fail[i + 1] = k;
  }
  const std::size_t p = n - fail[n];
  return n % p == 0 ? p : n;
}

template <class T>
std::size_t primitive_root_length(const std::vector<T>& x) {
  return primitive_root_length(std::span<const T>(x));
}

}  // namespace cbwt
