#include "cbwt/dynseq.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "cbwt/errors.hpp"

namespace cbwt {

std::uint64_t& dynseq_op_counter() {
  thread_local std::uint64_t counter = 0;
  return counter;
}

DynSeq::DynSeq(std::uint64_t alphabet_bound) : bound_(alphabet_bound) {}

DynSeq::DynSeq(std::uint64_t alphabet_bound, std::span<const std::uint64_t> values)
    : bound_(alphabet_bound), values_(values.size(), [&](std::size_t i) { return values[i]; }) {
  std::uint64_t top = 0;
  for (auto v : values) {
    check_value(v);
    top = std::max(top, v);
  }
  grow_levels(top);
  std::vector<std::uint64_t> cur(values.begin(), values.end());
  std::vector<std::uint64_t> ones;
  for (std::size_t level = 0; level < levels_.size(); ++level) {
    const std::size_t shift = levels_.size() - 1 - level;
    levels_[level] = detail::DynBitVector(cur.size(), [&](std::size_t i) { return ((cur[i] >> shift) & 1) != 0; });
    ones.clear();
    std::size_t z = 0;
    for (auto v : cur) {
      if ((v >> shift) & 1) {
        ones.push_back(v);
      } else {
        cur[z++] = v;
      }
    }
    zeros_[level] = z;
    std::copy(ones.begin(), ones.end(), cur.begin() + static_cast<std::ptrdiff_t>(z));
  }
}

void DynSeq::widen_alphabet(std::uint64_t bound) { bound_ = std::max(bound_, bound); }

void DynSeq::check_pos(std::size_t i, std::size_t hi) const {
  if (i < 1 || i > hi) {
    throw RangeError("position " + std::to_string(i) + " outside [1.." + std::to_string(hi) + "]");
  }
}

void DynSeq::check_value(std::uint64_t c) const {
  if (c > bound_) {
    throw AlphabetError("value " + std::to_string(c) + " exceeds alphabet bound " + std::to_string(bound_));
  }
}

void DynSeq::grow_levels(std::uint64_t c) {
  const std::size_t n = size();
  while (!fits(c)) {
    levels_.insert(levels_.begin(), detail::DynBitVector(n, [](std::size_t) { return false; }));
    zeros_.insert(zeros_.begin(), n);
  }
}

void DynSeq::insert(std::size_t i, std::uint64_t c) {
  ++dynseq_op_counter();
  check_pos(i, size() + 1);
  check_value(c);
  grow_levels(c);
  std::size_t p = i - 1;
  for (std::size_t level = 0; level < levels_.size(); ++level) {
    auto& bv = levels_[level];
    if (bit_at(c, level)) {
      bv.insert(p, true);
      p = zeros_[level] + bv.rank1(p);
    } else {
      bv.insert(p, false);
      ++zeros_[level];
      p = bv.rank0(p);
    }
  }
  values_.insert(i - 1, c);
}

void DynSeq::erase(std::size_t k) {
  ++dynseq_op_counter();
  check_pos(k, size());
  std::size_t p = k - 1;
  for (std::size_t level = 0; level < levels_.size(); ++level) {
    auto& bv = levels_[level];
    const std::size_t next = bv.get(p) ? zeros_[level] + bv.rank1(p) : bv.rank0(p);
    if (!bv.erase(p)) --zeros_[level];
    p = next;
  }
  values_.erase(k - 1);
}

void DynSeq::set(std::size_t i, std::uint64_t c) {
  check_pos(i, size());
  check_value(c);
  if (access(i) == c) return;
  erase(i);
  insert(i, c);
  dynseq_op_counter() -= 2;
}

std::uint64_t DynSeq::access(std::size_t i) const {
  ++dynseq_op_counter();
  check_pos(i, size());
  return values_.get(i - 1);
}

std::size_t DynSeq::rank(std::uint64_t c, std::size_t j) const {
  ++dynseq_op_counter();
  if (j > size()) throw RangeError("rank position " + std::to_string(j) + " beyond length");
  if (!fits(c)) return 0;
  std::size_t lo = 0, hi = j;
  for (std::size_t level = 0; level < levels_.size(); ++level) {
    const auto& bv = levels_[level];
    if (bit_at(c, level)) {
      lo = zeros_[level] + bv.rank1(lo);
      hi = zeros_[level] + bv.rank1(hi);
    } else {
      lo = bv.rank0(lo);
      hi = bv.rank0(hi);
    }
  }
  return hi - lo;
}

std::size_t DynSeq::select(std::uint64_t c, std::size_t i) const {
  ++dynseq_op_counter();
  if (i == 0 || !fits(c)) throw NotFoundError("no occurrence " + std::to_string(i) + " of " + std::to_string(c));
  std::size_t lo = 0, hi = size();
  for (std::size_t level = 0; level < levels_.size(); ++level) {
    const auto& bv = levels_[level];
    if (bit_at(c, level)) {
      lo = zeros_[level] + bv.rank1(lo);
      hi = zeros_[level] + bv.rank1(hi);
    } else {
      lo = bv.rank0(lo);
      hi = bv.rank0(hi);
    }
  }
  if (hi - lo < i) throw NotFoundError("no occurrence " + std::to_string(i) + " of " + std::to_string(c));
  std::size_t p = lo + i - 1;
  for (std::size_t level = levels_.size(); level-- > 0;) {
    const auto& bv = levels_[level];
    p = bit_at(c, level) ? bv.select1(p - zeros_[level]) : bv.select0(p);
  }
  return p + 1;
}

std::size_t DynSeq::count_less(std::size_t lo, std::size_t hi, std::uint64_t c) const {
  if (!fits(c)) return hi - lo;
  std::size_t result = 0;
  for (std::size_t level = 0; level < levels_.size() && lo < hi; ++level) {
    const auto& bv = levels_[level];
    const std::size_t z_lo = bv.rank0(lo), z_hi = bv.rank0(hi);
    if (bit_at(c, level)) {
      result += z_hi - z_lo;
      lo = zeros_[level] + (lo - z_lo);
      hi = zeros_[level] + (hi - z_hi);
    } else {
      lo = z_lo;
      hi = z_hi;
    }
  }
  return result;
}

std::size_t DynSeq::rangecount(std::size_t i, std::size_t j, std::uint64_t c, std::uint64_t d) const {
  ++dynseq_op_counter();
  if (j > size()) throw RangeError("rangecount end " + std::to_string(j) + " beyond length");
  if (i < 1) throw RangeError("rangecount start must be >= 1");
  if (i > j || c > d) return 0;
  const std::size_t upto = d == UINT64_MAX ? j - i + 1 : count_less(i - 1, j, d + 1);
  return upto - count_less(i - 1, j, c);
}

std::size_t DynSeq::count_at_least(std::size_t i, std::size_t j, std::uint64_t c) const {
  ++dynseq_op_counter();
  if (j > size()) throw RangeError("count_at_least end " + std::to_string(j) + " beyond length");
  if (i < 1) throw RangeError("count_at_least start must be >= 1");
  if (i > j) return 0;
  return (j - i + 1) - count_less(i - 1, j, c);
}

std::optional<std::uint64_t> DynSeq::rnv(std::size_t i, std::size_t j, std::int64_t c) const {
  if (c < 0) return range_min(i, j);
  ++dynseq_op_counter();
  check_pos(i, size());
  check_pos(j, size());
  if (i > j) return std::nullopt;
  const std::uint64_t x = static_cast<std::uint64_t>(c) + 1;
  if (x == 0 || !fits(x)) return std::nullopt;

  // Smallest value >= x whose wavelet range at `level` is [lo, hi).
  auto search = [&](auto&& self, std::size_t level, std::size_t lo, std::size_t hi, std::uint64_t prefix,
                    bool tight) -> std::optional<std::uint64_t> {
    for (;;) {
      if (lo >= hi) return std::nullopt;
      if (level == levels_.size()) return prefix;
      const auto& bv = levels_[level];
      const std::size_t z_lo = bv.rank0(lo), z_hi = bv.rank0(hi);
      const std::size_t o_lo = zeros_[level] + (lo - z_lo), o_hi = zeros_[level] + (hi - z_hi);
      if (tight && bit_at(x, level)) {
        lo = o_lo, hi = o_hi, prefix = prefix << 1 | 1;
      } else if (tight) {
        if (auto r = self(self, level + 1, z_lo, z_hi, prefix << 1, true)) return r;
        lo = o_lo, hi = o_hi, prefix = prefix << 1 | 1, tight = false;
      } else if (z_lo < z_hi) {
        lo = z_lo, hi = z_hi, prefix <<= 1;
      } else {
        lo = o_lo, hi = o_hi, prefix = prefix << 1 | 1;
      }
      ++level;
    }
  };
  return search(search, 0, i - 1, j, 0, true);
}

std::uint64_t DynSeq::range_min(std::size_t i, std::size_t j) const {
  ++dynseq_op_counter();
  check_pos(i, size());
  check_pos(j, size());
  if (i > j) throw RangeError("range_min on empty range");
  return values_.range_min(i - 1, j);
}

Interval DynSeq::mi(std::size_t j, std::uint64_t c) const {
  ++dynseq_op_counter();
  check_pos(j, size());
  Interval out{0, size()};
  if (auto x = values_.prev_less(j, c)) out.lo = *x + 1;
  if (auto x = values_.next_less(j, c)) out.hi = *x;
  return out;
}

std::vector<std::uint64_t> DynSeq::to_vector() const {
  std::vector<std::uint64_t> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_.get(i);
  return out;
}

bool DynSeq::operator==(const DynSeq& other) const { return to_vector() == other.to_vector(); }

void DynSeq::dump(std::ostream& out) const {
  for (auto v : to_vector()) out << v << '\n';
}

DynSeq DynSeq::parse_dump(std::istream& in, std::uint64_t alphabet_bound) {
  std::vector<std::uint64_t> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(line, &used);
    } catch (const std::exception&) {
      throw FormatError("bad dump line: " + line);
    }
    if (used != line.size()) throw FormatError("bad dump line: " + line);
    values.push_back(v);
  }
  return DynSeq(alphabet_bound, values);
}

}  // namespace cbwt
