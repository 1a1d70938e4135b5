#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbwt/index.hpp"
#include "cbwt/symbols.hpp"

namespace cbwt {

// cnt = number of indexed conjugates omega-preceding or equal to V; plcp and
// slcp are the lcp counts with the conjugates at ranks cnt and cnt + 1
// (-1 when that rank does not exist).
struct ExtHelpers {
  std::size_t cnt = 0;
  std::int64_t plcp = -1;
  std::int64_t slcp = 0;
  bool operator==(const ExtHelpers&) const = default;
};

// Turns the index of {R} (R ending in its only $) into the index of {bR}
// where pi = pi(bR) and y is the lex rank of R. Returns the lex rank of bR.
std::size_t extend_front(CbwtIndex& index, PiValue pi, std::size_t y);

// Index of {R}; R must end in its single $.
CbwtIndex build_single_dollar(std::span<const Symbol> r);

// Index of the circular text {T}.
CbwtIndex build_single(std::span<const std::uint32_t> t, std::uint64_t id = 1);

// Helpers of V from pi(V) and the helpers of rot(V, 1).
ExtHelpers next_helper(const CbwtIndex& index, PiValue pi, ExtHelpers prev);

struct HelperRow {
  std::size_t rotation = 0;
  PiValue pi = PiValue::dollar();
  ExtHelpers helpers;
};

// Intermediate values of one extension, for inspection and tests.
struct ExtensionTrace {
  bool omega_equal_case = false;
  std::vector<HelperRow> rows;  // in computation order (descending rotation)
  RtsString single_ft;
  RtsString single_lt;
  std::vector<std::size_t> single_lcp;
  std::vector<std::int64_t> lex_plcp;
  std::vector<std::int64_t> lex_slcp;
  RtsString merged_ft;
  RtsString merged_lt;
  std::vector<std::size_t> merged_lcp;
  std::vector<bool> marks;  // E before zeroing
};

// Adds text S to a non-empty index.
void extend_with_text(CbwtIndex& index, std::span<const std::uint32_t> s, std::uint64_t id,
                      ExtensionTrace* trace = nullptr);

// Index of the collection; ids are 1-based input positions, texts are
// inserted in ascending length order.
CbwtIndex build_collection(const std::vector<std::vector<std::uint32_t>>& texts);

}  // namespace cbwt
