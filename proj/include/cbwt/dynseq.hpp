#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "cbwt/detail/bit_vector.hpp"
#include "cbwt/detail/min_seq.hpp"

namespace cbwt {

struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool operator==(const Interval&) const = default;
};

// Counts public DynSeq calls on this thread; used to check construction cost.
std::uint64_t& dynseq_op_counter();

// Dynamic sequence over [0..alphabet_bound] with 1-based positions.
//
// Values live twice: in a wavelet matrix over dynamic bit vectors (rank,
// select, rangecount, rnv) and in a min-augmented tree (access, mi, range
// minima). The wavelet grows its level count with the largest stored value.
class DynSeq {
 public:
  explicit DynSeq(std::uint64_t alphabet_bound = 1);
  DynSeq(std::uint64_t alphabet_bound, std::span<const std::uint64_t> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return size() == 0; }
  std::uint64_t alphabet_bound() const { return bound_; }
  // Raises the bound; stored values are unaffected.
  void widen_alphabet(std::uint64_t bound);

  void insert(std::size_t i, std::uint64_t c);
  void erase(std::size_t k);
  void set(std::size_t i, std::uint64_t c);

  std::uint64_t access(std::size_t i) const;
  std::uint64_t operator[](std::size_t i) const { return access(i); }
  std::size_t rank(std::uint64_t c, std::size_t j) const;
  std::size_t select(std::uint64_t c, std::size_t i) const;
  std::size_t rangecount(std::size_t i, std::size_t j, std::uint64_t c, std::uint64_t d) const;
  // Count of values >= c in [i..j].
  std::size_t count_at_least(std::size_t i, std::size_t j, std::uint64_t c) const;
  // Smallest value in [i..j] strictly greater than c; c = -1 gives the minimum.
  std::optional<std::uint64_t> rnv(std::size_t i, std::size_t j, std::int64_t c) const;
  std::uint64_t range_min(std::size_t i, std::size_t j) const;
  Interval mi(std::size_t j, std::uint64_t c) const;

  std::vector<std::uint64_t> to_vector() const;
  bool operator==(const DynSeq& other) const;

  // One value per line, decimal.
  void dump(std::ostream& out) const;
  static DynSeq parse_dump(std::istream& in, std::uint64_t alphabet_bound);

 private:
  std::uint64_t bit_at(std::uint64_t c, std::size_t level) const {
    return (c >> (levels_.size() - 1 - level)) & 1;
  }
  bool fits(std::uint64_t c) const { return levels_.size() >= 64 || (c >> levels_.size()) == 0; }
  void grow_levels(std::uint64_t c);
  // Values < c among 0-based [lo, hi).
  std::size_t count_less(std::size_t lo, std::size_t hi, std::uint64_t c) const;
  void check_pos(std::size_t i, std::size_t hi) const;
  void check_value(std::uint64_t c) const;

  std::uint64_t bound_;
  std::vector<detail::DynBitVector> levels_;  // most significant bit first
  std::vector<std::size_t> zeros_;
  detail::MinSeq values_;
};

}  // namespace cbwt
