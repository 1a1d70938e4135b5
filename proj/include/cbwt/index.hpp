#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbwt/dynseq.hpp"
#include "cbwt/encodings.hpp"
#include "cbwt/symbols.hpp"

namespace cbwt {

// Lex-rank interval [lo..hi]; empty when hi < lo.
struct ConjRange {
  std::size_t lo = 1;
  std::size_t hi = 0;
  bool empty() const { return hi < lo; }
  std::size_t size() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const ConjRange&) const = default;
};

struct TextMeta {
  std::uint64_t id = 0;           // caller-visible id
  std::size_t length = 0;
  std::size_t root_length = 0;    // primitive root length of the rotational PD encoding
  std::size_t anchor = 0;         // lex rank of rotation 0
};

// FT, LT and LCP in dynamic sequences plus the helper bit string E.
// Texts are kept in construction order; conjugate ids number their
// positions in that order's concatenation.
class CbwtIndex {
 public:
  CbwtIndex() = default;
  CbwtIndex(std::span<const PiValue> ft, std::span<const PiValue> lt, std::span<const std::uint64_t> lcp,
            std::vector<TextMeta> texts);

  // Index of the single text "$".
  static CbwtIndex dollar_seed();

  std::size_t size() const { return ft_.size(); }

  PiValue ft_at(std::size_t i) const { return PiValue::from_encoded(ft_.access(i)); }
  PiValue lt_at(std::size_t i) const { return PiValue::from_encoded(lt_.access(i)); }
  std::size_t lcp_at(std::size_t i) const { return lcp_.access(i); }

  RtsString ft_values() const;
  RtsString lt_values() const;
  std::vector<std::size_t> lcp_values() const;

  DynSeq& ft() { return ft_; }
  DynSeq& lt() { return lt_; }
  DynSeq& lcp() { return lcp_; }
  DynSeq& marks() { return marks_; }
  const DynSeq& ft() const { return ft_; }
  const DynSeq& lt() const { return lt_; }
  const DynSeq& lcp() const { return lcp_; }
  const DynSeq& marks() const { return marks_; }

  const std::vector<TextMeta>& texts() const { return texts_; }
  std::vector<TextMeta>& texts() { return texts_; }
  // First conjugate id of text k (0-based k).
  std::size_t text_start(std::size_t k) const;
  // Text index (0-based) holding conjugate id j.
  std::size_t text_of(std::size_t j) const;

  std::size_t lf(std::size_t i) const;
  std::size_t fl(std::size_t i) const;

  // Lets stored values grow to cover an index of n symbols.
  void reserve_symbols(std::size_t n);

  // FNV-1a over all four sequences.
  std::uint64_t digest() const;

 private:
  DynSeq ft_{1};
  DynSeq lt_{1};
  DynSeq lcp_{1};
  DynSeq marks_{1};
  std::vector<TextMeta> texts_;
};

ConjRange full_range(const CbwtIndex& index);

// One backward step: from crange(P[i+1..]) to crange(P[i..]) given
// e = e(i) and h = h(i) of the pattern.
ConjRange crange_update(const CbwtIndex& index, std::size_t e, std::uint64_t h, ConjRange range);

ConjRange backward_search(const CbwtIndex& index, std::span<const Symbol> p);
ConjRange backward_search(const CbwtIndex& index, std::span<const std::uint32_t> p);
std::size_t count(const CbwtIndex& index, std::span<const std::uint32_t> p);

}  // namespace cbwt
