#include "cbwt/index.hpp"

#include <algorithm>

#include "cbwt/errors.hpp"

namespace cbwt {

namespace {

std::vector<std::uint64_t> encode(std::span<const PiValue> v) {
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (auto p : v) out.push_back(p.encoded());
  return out;
}

RtsString decode(const DynSeq& s) {
  RtsString out;
  for (auto x : s.to_vector()) out.push_back(PiValue::from_encoded(x));
  return out;
}

}  // namespace

CbwtIndex::CbwtIndex(std::span<const PiValue> ft, std::span<const PiValue> lt, std::span<const std::uint64_t> lcp,
                     std::vector<TextMeta> texts)
    : texts_(std::move(texts)) {
  const std::size_t n = ft.size();
  if (lt.size() != n || lcp.size() != n) throw std::invalid_argument("FT, LT and LCP lengths differ");
  const auto fte = encode(ft), lte = encode(lt);
  ft_ = DynSeq(n + 1, fte);
  lt_ = DynSeq(n + 1, lte);
  lcp_ = DynSeq(std::max<std::size_t>(n, 1), lcp);
  std::vector<std::uint64_t> zeros(n, 0);
  marks_ = DynSeq(1, zeros);
}

CbwtIndex CbwtIndex::dollar_seed() {
  const PiValue d[] = {PiValue::dollar()};
  const std::uint64_t z[] = {0};
  return CbwtIndex(d, d, z, {TextMeta{0, 1, 1, 1}});
}

RtsString CbwtIndex::ft_values() const { return decode(ft_); }
RtsString CbwtIndex::lt_values() const { return decode(lt_); }

std::vector<std::size_t> CbwtIndex::lcp_values() const {
  const auto v = lcp_.to_vector();
  return std::vector<std::size_t>(v.begin(), v.end());
}

std::size_t CbwtIndex::text_start(std::size_t k) const {
  std::size_t s = 1;
  for (std::size_t t = 0; t < k; ++t) s += texts_[t].length;
  return s;
}

std::size_t CbwtIndex::text_of(std::size_t j) const {
  std::size_t s = 1;
  for (std::size_t t = 0; t < texts_.size(); ++t) {
    if (j < s + texts_[t].length) return t;
    s += texts_[t].length;
  }
  throw RangeError("conjugate id " + std::to_string(j) + " beyond index");
}

std::size_t CbwtIndex::lf(std::size_t i) const {
  const std::uint64_t c = lt_.access(i);
  return ft_.select(c, lt_.rank(c, i));
}

std::size_t CbwtIndex::fl(std::size_t i) const {
  const std::uint64_t c = ft_.access(i);
  return lt_.select(c, ft_.rank(c, i));
}

void CbwtIndex::reserve_symbols(std::size_t n) {
  ft_.widen_alphabet(n + 1);
  lt_.widen_alphabet(n + 1);
  lcp_.widen_alphabet(n);
}

std::uint64_t CbwtIndex::digest() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const DynSeq* s : {&ft_, &lt_, &lcp_, &marks_}) {
    mix(s->size());
    for (auto x : s->to_vector()) mix(x);
  }
  return h;
}

ConjRange full_range(const CbwtIndex& index) { return ConjRange{1, index.size()}; }

ConjRange crange_update(const CbwtIndex& index, std::size_t e, std::uint64_t h, ConjRange range) {
  if (range.empty()) return range;
  const DynSeq& lt = index.lt();
  const std::uint64_t hv = PiValue::count(h).encoded();
  const auto [l, r] = range;
  if (e > 1) {
    const std::size_t c = lt.rangecount(l, r, hv, hv);
    if (c == 0) return ConjRange{r + 1, r};
    const std::size_t rp = index.lf(lt.select(hv, lt.rank(hv, r)));
    return ConjRange{rp - c + 1, rp};
  }
  const std::size_t c = lt.count_at_least(l, r, hv);
  if (c == 0) return ConjRange{r + 1, r};
  const std::uint64_t v = *lt.rnv(l, r, static_cast<std::int64_t>(hv) - 1);
  const std::size_t x = lt.select(v, lt.rank(v, r));
  const Interval mi = index.lcp().mi(x, PiValue::from_encoded(v).value() + 1);
  // Positions past r are outside the current range and must not be counted.
  const std::size_t y = lt.count_at_least(l, x - 1, hv) + lt.count_at_least(x + 1, std::min(mi.hi, r), hv);
  const std::size_t rp = index.lf(x) + c - (y + 1);
  return ConjRange{rp - c + 1, rp};
}

ConjRange backward_search(const CbwtIndex& index, std::span<const Symbol> p) {
  ConjRange range = full_range(index);
  if (p.empty()) return range;
  const PatternContext ctx = preprocess_pattern(p);
  for (std::size_t i = p.size(); i >= 1 && !range.empty(); --i) range = crange_update(index, ctx.e(i), ctx.h(i), range);
  return range;
}

ConjRange backward_search(const CbwtIndex& index, std::span<const std::uint32_t> p) {
  return backward_search(index, to_symbols(p));
}

std::size_t count(const CbwtIndex& index, std::span<const std::uint32_t> p) { return backward_search(index, p).size(); }

}  // namespace cbwt
