#pragma once

#include <vector>

#include "cbwt/oracle.hpp"
#include "support/strings.hpp"

namespace cbwt::testing {

using Sizes = std::vector<std::size_t>;

inline std::vector<std::vector<std::uint32_t>> running_example_texts() { return {vals("512"), vals("5363"), vals("4478")}; }

inline oracle::TextCollection running_example() { return oracle::TextCollection::from_values(running_example_texts()); }

inline const Sizes kRunningCa = {8, 9, 2, 5, 7, 10, 3, 11, 1, 4, 6};
inline const Sizes kRunningIca = {9, 3, 7, 10, 4, 11, 5, 1, 2, 6, 8};
// The published table lists 1 at rank 7 (251 after 7844); PD(251) = inf 1 inf and
// PD(7844) = inf 1 inf 1 share two infinities, so the defined value is 2.
inline const Sizes kPublishedLcp = {0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2};
inline const Sizes kRunningLcp = {0, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2};
inline const Sizes kRunningLf = {8, 1, 9, 10, 11, 2, 3, 6, 7, 4, 5};
inline const Sizes kRunningFl = {2, 6, 7, 10, 11, 8, 9, 1, 3, 4, 5};
inline RtsString running_ft() { return pis("12222110000"); }
inline RtsString running_lt() { return pis("01000221122"); }

}  // namespace cbwt::testing
