#include "cbwt/encodings.hpp"

#include <algorithm>
#include <ostream>

namespace cbwt {

SymbolString to_symbols(std::span<const std::uint32_t> values) {
  SymbolString out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(Symbol::plain(v));
  return out;
}

std::ostream& operator<<(std::ostream& os, Symbol s) {
  if (s.is_dollar()) return os << '$';
  return os << s.value();
}

std::ostream& operator<<(std::ostream& os, PdSymbol s) {
  switch (s.kind()) {
    case PdSymbol::Kind::kDollar: return os << '$';
    case PdSymbol::Kind::kInfinity: return os << "inf";
    default: return os << s.distance();
  }
}

std::ostream& operator<<(std::ostream& os, PiValue p) { return os << to_token(p); }

std::string to_token(PiValue p) { return p.is_dollar() ? "$" : std::to_string(p.value()); }

PdString parent_distance_encode(std::span<const Symbol> v) {
  PdString out;
  out.reserve(v.size());
  std::vector<std::size_t> stack;  // positions with non-decreasing values
  for (std::size_t i = 0; i < v.size(); ++i) {
    while (!stack.empty() && v[stack.back()] > v[i]) stack.pop_back();
    if (v[i].is_dollar()) {
      out.push_back(PdSymbol::dollar());
    } else if (stack.empty()) {
      out.push_back(PdSymbol::infinity());
    } else {
      out.push_back(PdSymbol::dist(static_cast<std::uint32_t>(i - stack.back())));
    }
    stack.push_back(i);
  }
  return out;
}

PdString rotational_pd_encode(std::span<const Symbol> v) {
  if (v.empty()) throw std::invalid_argument("rotational_pd_encode of empty string");
  SymbolString sq(v.begin(), v.end());
  sq.insert(sq.end(), v.begin(), v.end());
  PdString pd = parent_distance_encode(sq);
  return PdString(pd.begin() + static_cast<std::ptrdiff_t>(v.size()), pd.end());
}

std::size_t infinity_count(std::span<const PdSymbol> pd) {
  return static_cast<std::size_t>(std::count_if(pd.begin(), pd.end(), [](PdSymbol s) { return s.is_infinity(); }));
}

RtsString rts_encode(std::span<const Symbol> v) {
  if (v.empty()) throw std::invalid_argument("rts_encode of empty string");
  const std::size_t n = v.size();
  RtsString out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_dollar()) {
      out.push_back(PiValue::dollar());
      continue;
    }
    SymbolString rot, ext{v[i]};
    for (std::size_t k = 1; k <= n; ++k) rot.push_back(v[(i + k) % n]);
    ext.insert(ext.end(), rot.begin(), rot.end());
    const PdString pd_rot = parent_distance_encode(rot);
    const PdString pd_ext = parent_distance_encode(ext);
    const std::size_t all = infinity_count(pd_rot);
    const std::size_t below = infinity_count(std::span<const PdSymbol>(pd_ext).subspan(1));
    out.push_back(PiValue::count(all - below));
  }
  return out;
}

PiValue pi_head(std::span<const Symbol> v) {
  if (v.empty()) throw std::invalid_argument("pi_head of empty string");
  if (v[0].is_dollar()) return PiValue::dollar();
  const std::size_t n = v.size();
  std::uint64_t count = 0;
  bool have_min = false;
  Symbol running = v[0];
  for (std::size_t k = 1; k <= n; ++k) {
    const Symbol s = v[k % n];
    if (s.is_dollar()) break;
    if (!have_min || s < running) {
      have_min = true;
      running = s;
      if (s >= v[0]) ++count;
    }
  }
  return PiValue::count(count);
}

std::size_t lcp_count(std::span<const Symbol> u, std::span<const Symbol> w) {
  const PdString pu = parent_distance_encode(u);
  const PdString pw = parent_distance_encode(w);
  const auto [end_u, end_w] = std::mismatch(pu.begin(), pu.end(), pw.begin(), pw.end());
  (void)end_w;
  return infinity_count(std::span<const PdSymbol>(pu.begin(), end_u));
}

PatternContext preprocess_pattern(std::span<const Symbol> p) {
  const std::size_t m = p.size();
  std::vector<std::uint64_t> h(m);
  std::vector<std::size_t> e(m);
  std::vector<Symbol> minima;
  for (std::size_t i = m; i-- > 0;) {
    if (p[i].is_dollar()) throw std::invalid_argument("pattern contains $");
    std::uint64_t popped = 0;
    while (!minima.empty() && minima.back() >= p[i]) {
      minima.pop_back();
      ++popped;
    }
    minima.push_back(p[i]);
    h[i] = popped;
    e[i] = minima.size();
  }
  return PatternContext(std::move(h), std::move(e));
}

PatternContext preprocess_pattern(std::span<const std::uint32_t> p) { return preprocess_pattern(to_symbols(p)); }

}  // namespace cbwt
