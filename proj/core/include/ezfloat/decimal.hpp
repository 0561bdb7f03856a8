#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "ezfloat/bigmath.hpp"

namespace ezfloat {

/// A decimal number (-1)^negative * mant * 10^point.
///
/// parse_decimal produces the canonical form: no trailing zero digits in
/// `mant` (they are folded into `point`), and zero is stored with point 0.
struct DecimalSci {
  bool negative = false;
  BigInt mant = 0;
  std::int64_t point = 0;

  friend bool operator==(const DecimalSci& a, const DecimalSci& b) {
    return a.negative == b.negative && a.mant == b.mant && a.point == b.point;
  }
};

enum class SpecialValue { kNaN, kPositiveInfinity, kNegativeInfinity };

using ParsedNumber = std::variant<DecimalSci, SpecialValue>;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exponents with more significant digits than this saturate; any nonzero
/// mantissa then clamps to zero or infinity.
inline constexpr std::size_t kMaxExponentDigits = 10;

/// Parses `[+-]? (NaN | Infinity | digits[.digits]? | .digits) ([eE][+-]?digits)?`.
///
/// Every mantissa digit is kept, so a later conversion rounds exactly once.
/// Throws ParseError on any other input.
ParsedNumber parse_decimal(std::string_view text);

}  // namespace ezfloat
