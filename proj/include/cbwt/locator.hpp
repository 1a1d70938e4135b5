#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cbwt/dynseq.hpp"
#include "cbwt/index.hpp"

namespace cbwt {

// Sampled conjugate array: every rate-th position of each LF cycle, counted
// from the start of its root block, is stored with its conjugate id.
struct SampleStore {
  std::size_t rate = 1;
  DynSeq marked{1};                   // 1 at sampled lex ranks
  std::vector<std::uint64_t> values;  // conjugate ids of the marked ranks, in lex order
};

struct Occurrence {
  std::uint64_t text_id = 0;
  std::size_t offset = 0;  // 1-based start inside the text
  auto operator<=>(const Occurrence&) const = default;
};

// ceil(lg n), at least 1.
std::size_t default_sample_rate(std::size_t n);

// rate 0 picks default_sample_rate. Requires anchors and root lengths in the
// text metadata.
SampleStore attach_samples(const CbwtIndex& index, std::size_t rate = 0);

// Conjugate id at lex rank i.
std::size_t locate_rank(const CbwtIndex& index, const SampleStore& store, std::size_t i);

std::vector<Occurrence> locate(const CbwtIndex& index, const SampleStore& store, std::span<const Symbol> p);
std::vector<Occurrence> locate(const CbwtIndex& index, const SampleStore& store, std::span<const std::uint32_t> p);

}  // namespace cbwt
