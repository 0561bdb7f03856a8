#pragma once

#include <cstdint>
#include <string_view>

#include "ezfloat/bigmath.hpp"
#include "ezfloat/decimal.hpp"
#include "ezfloat/stats.hpp"

namespace ezfloat {

struct ReadOutcome {
  double value = 0.0;
  ConversionStats stats;
};

/// Nearest binary64 to mant * 10^point (mant >= 0), rounding half to even.
///
/// Powers of two are factored out of 10^point, so the divisor is a power of
/// five. At most two rounded quotients are computed: the dividend is sized
/// so the quotient has 53 or 54 bits, and a 54-bit quotient is recomputed
/// against twice the divisor. Results that land below the normal range are
/// rounded once, directly at the 2^-1074 scale. Overflow gives +infinity.
double decimal_to_double_pow5(const BigInt& mant, std::int64_t point,
                              ConversionStats* stats = nullptr);

/// Reference variant scaling by whole powers of ten. Same contract.
double decimal_to_double_pow10(const BigInt& mant, std::int64_t point,
                               ConversionStats* stats = nullptr);

/// Machine-word reader; returns false when an intermediate would not fit
/// in 64 bits. On success the result equals decimal_to_double_pow5.
bool decimal_to_double_word(std::uint64_t mant, std::int64_t point, double& out,
                            ConversionStats* stats = nullptr);

/// Parses `text` and converts it with a single rounding. Special tokens map to
/// the quiet NaN and the infinities; a negative zero keeps its sign.
/// Throws ParseError for malformed input.
double read_double(std::string_view text);

ReadOutcome read_double_with_stats(std::string_view text);

/// Converts an already-parsed decimal, applying the sign.
double to_double(const DecimalSci& decimal, ConversionStats* stats = nullptr);

}  // namespace ezfloat
