#include "cbwt/builder.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "cbwt/detail/bit_vector.hpp"
#include "cbwt/encodings.hpp"

namespace cbwt {

namespace {

std::uint64_t enc(std::uint64_t count) { return PiValue::count(count).encoded(); }

// Lcp count of V and U from the lcp count e of their left rotations when
// V precedes U; equal pi values below e shift the count, anything else
// leaves the leading infinity only.
std::int64_t rotation_lcp(PiValue pv, PiValue pu, std::int64_t e) {
  if (pv.is_dollar() || pu.is_dollar()) return 0;
  if (pv != pu || static_cast<std::int64_t>(pv.value()) >= e) return 1;
  return e - static_cast<std::int64_t>(pv.value()) + 1;
}

std::size_t root_length_of(std::span<const std::uint32_t> t) {
  const SymbolString sym = to_symbols(t);
  return primitive_root_length(rotational_pd_encode(sym));
}

template <class OnStep>
CbwtIndex fold_front(std::span<const Symbol> r, OnStep on_step) {
  if (r.empty() || !r.back().is_dollar()) throw std::invalid_argument("text must end with $");
  const auto body = r.first(r.size() - 1);
  if (std::any_of(body.begin(), body.end(), [](Symbol s) { return s.is_dollar(); })) {
    throw std::invalid_argument("text must contain exactly one $");
  }
  CbwtIndex index = CbwtIndex::dollar_seed();
  index.reserve_symbols(r.size());
  std::size_t y = 1;
  if (!body.empty()) {
    const PatternContext ctx = preprocess_pattern(body);
    for (std::size_t k = body.size(); k >= 1; --k) {
      y = extend_front(index, PiValue::count(ctx.h(k)), y);
      on_step(k, y);
    }
  }
  const std::vector<std::uint64_t> zeros(index.size(), 0);
  index.marks() = DynSeq(1, zeros);
  index.texts() = {TextMeta{0, r.size(), r.size(), y}};
  return index;
}

}  // namespace

std::size_t extend_front(CbwtIndex& index, PiValue pi, std::size_t y) {
  DynSeq& ft = index.ft();
  DynSeq& lt = index.lt();
  DynSeq& lcp = index.lcp();
  const std::size_t rho = index.size();
  const std::uint64_t pv = pi.value();

  std::size_t c = 1;
  if (rho > 1) {
    const Interval m = lcp.mi(y, pv + 1);
    std::size_t l = m.lo;
    const std::size_t r = m.hi;
    c = lt.count_at_least(l, y - 1, enc(pv)) + 2 + lt.count_at_least(y + 1, r, enc(pv + 1));
    for (std::uint64_t i = pv; i >= 1; --i) {
      const std::size_t rp = l - 1;
      l = lcp.mi(y, i).lo;
      c += lt.count_at_least(l, rp, enc(i));
    }
  }

  std::int64_t p = 1;
  if (c == 1) {
    p = 0;  // rank 1 holds the $-conjugate
  } else if (const std::size_t f = index.fl(c); f < y) {
    p = rotation_lcp(index.ft_at(c), pi, static_cast<std::int64_t>(lcp.range_min(f + 1, y)));
  }
  std::int64_t s = 1;
  if (c < rho) {
    if (const std::size_t f = index.fl(c + 1); f > y) {
      s = rotation_lcp(pi, index.ft_at(c + 1), static_cast<std::int64_t>(lcp.range_min(y + 1, f)));
    }
  }

  lcp.insert(c + 1, static_cast<std::uint64_t>(p));
  if (c < rho) lcp.set(c + 2, static_cast<std::uint64_t>(s));
  ft.insert(c + 1, pi.encoded());
  lt.set(y, pi.encoded());
  lt.insert(c + 1, PiValue::dollar().encoded());
  return c + 1;
}

CbwtIndex build_single_dollar(std::span<const Symbol> r) {
  return fold_front(r, [](std::size_t, std::size_t) {});
}

CbwtIndex build_single(std::span<const std::uint32_t> t, std::uint64_t id) {
  const std::size_t n = t.size();
  if (n == 0) throw std::invalid_argument("empty text");
  SymbolString r;
  r.reserve(4 * n + 1);
  for (int rep = 0; rep < 4; ++rep) {
    for (auto v : t) r.push_back(Symbol::plain(v));
  }
  r.push_back(Symbol::dollar());

  // Y marks lex ranks of R-positions 2..n+1; position n+1 is rotation 0 of T.
  detail::DynBitVector marked(1, [](std::size_t) { return false; });
  std::size_t anchor = 0;
  const CbwtIndex big = fold_front(r, [&](std::size_t k, std::size_t rank) {
    marked.insert(rank - 1, k >= 2 && k <= n + 1);
    if (anchor >= rank) ++anchor;
    if (k == n + 1) anchor = rank;
  });

  std::vector<PiValue> ft(n, PiValue::dollar()), lt(n, PiValue::dollar());
  std::vector<std::uint64_t> lcp(n, 0);
  std::size_t prev = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t pos = marked.select1(i - 1) + 1;
    ft[i - 1] = big.ft_at(pos);
    lt[i - 1] = big.lt_at(pos);
    if (i > 1) lcp[i - 1] = big.lcp().range_min(prev + 1, pos);
    prev = pos;
  }
  const std::size_t anchor_t = marked.rank1(anchor);
  CbwtIndex out(ft, lt, lcp, {TextMeta{id, n, root_length_of(t), anchor_t}});
  return out;
}

ExtHelpers next_helper(const CbwtIndex& index, PiValue pi, ExtHelpers prev) {
  if (pi.is_dollar()) return {0, -1, 0};
  const DynSeq& lt = index.lt();
  const DynSeq& lcp = index.lcp();
  const std::size_t rho = index.size();
  const std::uint64_t pv = pi.value();
  const auto pvi = static_cast<std::int64_t>(pv);
  const std::size_t y = prev.cnt;

  std::size_t l = y + 1, r = y;
  if (prev.slcp >= pvi + 1) {
    const Interval m = lcp.mi(y + 1, pv + 1);
    l = m.lo, r = m.hi;
  } else if (prev.plcp >= pvi + 1) {
    const Interval m = lcp.mi(y, pv + 1);
    l = m.lo, r = m.hi;
  }
  std::size_t c = lt.count_at_least(y + 1, r, enc(pv + 1)) + lt.count_at_least(l, y, enc(pv));
  for (std::int64_t i = std::min(pvi, prev.plcp); i >= 1; --i) {
    const std::size_t rp = l - 1;
    l = lcp.mi(y, static_cast<std::uint64_t>(i)).lo;
    c += lt.count_at_least(l, rp, enc(static_cast<std::uint64_t>(i)));
  }

  ExtHelpers out{c, -1, -1};
  if (c > 0) {
    const std::size_t f = index.fl(c);
    if (f > y) {
      out.plcp = 1;
    } else {
      std::int64_t e = prev.plcp;
      if (f < y) e = std::min(e, static_cast<std::int64_t>(lcp.range_min(f + 1, y)));
      out.plcp = rotation_lcp(index.ft_at(c), pi, e);
    }
  }
  if (c < rho) {
    const std::size_t f = index.fl(c + 1);
    if (f < y + 1) {
      out.slcp = 1;
    } else {
      std::int64_t e = prev.slcp;
      if (f > y + 1) e = std::min(e, static_cast<std::int64_t>(lcp.range_min(y + 2, f)));
      out.slcp = rotation_lcp(pi, index.ft_at(c + 1), e);
    }
  }
  return out;
}

void extend_with_text(CbwtIndex& index, std::span<const std::uint32_t> s, std::uint64_t id, ExtensionTrace* trace) {
  const std::size_t lambda = s.size();
  const std::size_t rho = index.size();
  if (lambda == 0) throw std::invalid_argument("empty text");
  if (rho == 0) throw std::invalid_argument("extending an empty index");
  DynSeq& marks = index.marks();
  if (marks.rangecount(1, marks.size(), 1, 1) != 0) std::abort();

  const CbwtIndex single = build_single(s, id);
  const std::size_t a0 = single.texts()[0].anchor;
  const std::size_t root = single.texts()[0].root_length;
  std::size_t z = lambda;
  for (const auto& t : index.texts()) z = std::max(z, t.length);

  std::vector<std::uint32_t> sw(4 * z);
  for (std::size_t i = 0; i < sw.size(); ++i) sw[i] = s[i % lambda];
  const bool omega_equal = !backward_search(index, std::span(sw).first(3 * z)).empty();

  // Helpers of rotations lambda..1 in descending order.
  std::vector<ExtHelpers> rows(lambda + 1);
  std::vector<PiValue> row_pi(lambda + 1, PiValue::dollar());
  auto record = [&](std::size_t rot, PiValue pi, ExtHelpers h) {
    if (trace) trace->rows.push_back({rot, pi, h});
  };
  if (omega_equal) {
    const auto pattern = std::span(sw).subspan(1);
    const PatternContext ctx = preprocess_pattern(pattern);
    ConjRange range = full_range(index);
    for (std::size_t i = pattern.size(); i >= 1; --i) {
      range = crange_update(index, ctx.e(i), ctx.h(i), range);
      if (i > lambda) continue;
      const std::size_t r = range.hi;
      const ExtHelpers h{r, static_cast<std::int64_t>(ctx.e(i)),
                         r < rho ? static_cast<std::int64_t>(index.lcp_at(r + 1)) : -1};
      rows[i] = h;
      row_pi[i] = PiValue::count(ctx.h(i));
      record(i, row_pi[i], h);
    }
  } else {
    const PatternContext ctx = preprocess_pattern(std::span<const std::uint32_t>(sw));
    ExtHelpers h{0, -1, 0};
    record(4 * z, PiValue::dollar(), h);
    for (std::size_t j = 4 * z - 1; j >= 1; --j) {
      const PiValue pi = PiValue::count(ctx.h(j + 1));
      h = next_helper(index, pi, h);
      record(j, pi, h);
      if (j <= lambda) rows[j] = h, row_pi[j] = pi;
    }
  }

  for (std::size_t i = lambda; i >= 1; --i) {
    const std::size_t cnt = rows[i].cnt;
    marks.insert(cnt == 0 ? 1 : marks.select(0, cnt) + 1, 1);
  }

  // Lex order of the rotations: rotation lambda is S itself at rank a0, and
  // lf steps one rotation back; omega-equal rotations share a block.
  const std::size_t block = lambda / root;
  std::vector<std::int64_t> lex_plcp(lambda + 1), lex_slcp(lambda + 1);
  std::size_t rank = a0;
  for (std::size_t i = lambda; i > lambda - root; --i) {
    for (std::size_t b = 0; b < block; ++b) {
      lex_plcp[rank + b] = rows[i].plcp;
      lex_slcp[rank + b] = rows[i].slcp;
    }
    rank = single.lf(rank);
  }

  const std::size_t total = rho + lambda;
  index.reserve_symbols(total);
  DynSeq& ft = index.ft();
  DynSeq& lt = index.lt();
  DynSeq& lcp = index.lcp();
  for (std::size_t k = 1; k <= lambda; ++k) {
    const std::size_t q = marks.select(1, k);
    ft.insert(q, single.ft().access(k));
    lt.insert(q, single.lt().access(k));
    std::uint64_t v = 0;
    if (q > 1) {
      v = marks.access(q - 1) == 1 ? single.lcp_at(k) : static_cast<std::uint64_t>(lex_plcp[k]);
    }
    lcp.insert(q, v);
    if (q < total && marks.access(q + 1) == 0) lcp.set(q + 1, static_cast<std::uint64_t>(lex_slcp[k]));
  }

  if (trace) {
    trace->omega_equal_case = omega_equal;
    trace->single_ft = single.ft_values();
    trace->single_lt = single.lt_values();
    trace->single_lcp = single.lcp_values();
    trace->lex_plcp.assign(lex_plcp.begin() + 1, lex_plcp.end());
    trace->lex_slcp.assign(lex_slcp.begin() + 1, lex_slcp.end());
    trace->merged_ft = index.ft_values();
    trace->merged_lt = index.lt_values();
    trace->merged_lcp = index.lcp_values();
    trace->marks.clear();
    for (auto b : marks.to_vector()) trace->marks.push_back(b != 0);
  }

  for (auto& t : index.texts()) t.anchor = marks.select(0, t.anchor);
  index.texts().push_back(TextMeta{id, lambda, root, marks.select(1, a0)});
  for (std::size_t k = 1; k <= lambda; ++k) marks.set(marks.select(1, 1), 0);
}

CbwtIndex build_collection(const std::vector<std::vector<std::uint32_t>>& texts) {
  if (texts.empty()) throw std::invalid_argument("no texts");
  for (const auto& t : texts) {
    if (t.empty()) throw std::invalid_argument("empty text");
  }
  std::vector<std::size_t> order(texts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return texts[a].size() < texts[b].size(); });
  CbwtIndex index = build_single(texts[order[0]], order[0] + 1);
  for (std::size_t k = 1; k < order.size(); ++k) extend_with_text(index, texts[order[k]], order[k] + 1);
  return index;
}

}  // namespace cbwt
