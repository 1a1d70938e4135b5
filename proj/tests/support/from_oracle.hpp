#pragma once

#include "cbwt/index.hpp"
#include "cbwt/oracle.hpp"

namespace cbwt::testing {

// Index assembled directly from brute-force arrays (no builder involved).
inline CbwtIndex index_from_oracle(const oracle::TextCollection& tc) {
  const auto b = oracle::brute_index(tc);
  std::vector<std::uint64_t> lcp(b.lcp.begin(), b.lcp.end());
  std::vector<TextMeta> meta;
  for (std::size_t k = 0; k < tc.text_count(); ++k) {
    meta.push_back(TextMeta{k + 1, tc.text(k).size(), 0, b.ca.ica[tc.start(k) - 1]});
  }
  return CbwtIndex(b.ft, b.lt, lcp, std::move(meta));
}

}  // namespace cbwt::testing
