#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cbwt {

// Text symbol: the sentinel $ or a plain value; $ sorts below every value.
class Symbol {
 public:
  static constexpr Symbol dollar() { return Symbol(0); }
  static constexpr Symbol plain(std::uint32_t v) { return Symbol(std::uint64_t{v} + 1); }

  constexpr bool is_dollar() const { return code_ == 0; }
  constexpr std::uint32_t value() const {
    assert(!is_dollar());
    return static_cast<std::uint32_t>(code_ - 1);
  }
  constexpr std::uint64_t code() const { return code_; }

  constexpr auto operator<=>(const Symbol&) const = default;

 private:
  explicit constexpr Symbol(std::uint64_t code) : code_(code) {}
  std::uint64_t code_;
};

using SymbolString = std::vector<Symbol>;

// Parent-distance symbol, ordered $ < 1 < 2 < ... < infinity.
class PdSymbol {
 public:
  enum class Kind : std::uint8_t { kDollar, kDist, kInfinity };

  static constexpr PdSymbol dollar() { return PdSymbol(Kind::kDollar, 0); }
  static constexpr PdSymbol dist(std::uint32_t k) { return PdSymbol(Kind::kDist, k); }
  static constexpr PdSymbol infinity() { return PdSymbol(Kind::kInfinity, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_infinity() const { return kind_ == Kind::kInfinity; }
  constexpr std::uint32_t distance() const { return dist_; }

  constexpr auto operator<=>(const PdSymbol&) const = default;

 private:
  constexpr PdSymbol(Kind kind, std::uint32_t dist) : kind_(kind), dist_(dist) {}
  Kind kind_;
  std::uint32_t dist_;
};

using PdString = std::vector<PdSymbol>;

// Value of the rotational signature: $ or a count. Stored in FT/LT as
// 0 for $ and count + 1 otherwise.
class PiValue {
 public:
  static constexpr PiValue dollar() { return PiValue(0); }
  static constexpr PiValue count(std::uint64_t c) { return PiValue(c + 1); }
  static constexpr PiValue from_encoded(std::uint64_t e) { return PiValue(e); }

  constexpr bool is_dollar() const { return enc_ == 0; }
  constexpr std::uint64_t value() const {
    assert(!is_dollar());
    return enc_ - 1;
  }
  constexpr std::uint64_t encoded() const { return enc_; }

  constexpr auto operator<=>(const PiValue&) const = default;

 private:
  explicit constexpr PiValue(std::uint64_t e) : enc_(e) {}
  std::uint64_t enc_;
};

using RtsString = std::vector<PiValue>;

SymbolString to_symbols(std::span<const std::uint32_t> values);

std::ostream& operator<<(std::ostream& os, Symbol s);
std::ostream& operator<<(std::ostream& os, PdSymbol s);
std::ostream& operator<<(std::ostream& os, PiValue p);

// "$" or decimal.
std::string to_token(PiValue p);

}  // namespace cbwt
