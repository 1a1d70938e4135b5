#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "cbwt/index.hpp"
#include "cbwt/locator.hpp"

namespace cbwt {

// Text file format:
//   CBWT 1
//   n d
//   id length            (d lines, construction order)
//   FT tokens / LT tokens / LCP tokens  ($ or decimal, space separated)
//   SAMPLES rate k
//   lexpos conjstart     (k lines)

// Syntactic content of an index file; nothing is cross-checked.
struct IndexFile {
  std::size_t n = 0;
  std::vector<std::pair<std::uint64_t, std::size_t>> texts;  // (id, length)
  RtsString ft;
  RtsString lt;
  std::vector<std::size_t> lcp;
  std::size_t rate = 1;
  std::vector<std::pair<std::size_t, std::size_t>> samples;  // (lexpos, conjstart)
};

struct LoadedIndex {
  CbwtIndex index;
  SampleStore samples;
};

void write_index(std::ostream& out, const CbwtIndex& index, const SampleStore& samples);

// Throws FormatError with the offending line number.
IndexFile parse_index_file(std::istream& in);

// Rebuilds anchors from the samples and root lengths from LF cycles.
LoadedIndex load_index(const IndexFile& file);

LoadedIndex read_index(std::istream& in);

}  // namespace cbwt
