#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#include <gmpxx.h>

#include "ezfloat/stats.hpp"

namespace ezfloat {

using BigInt = mpz_class;

/// Bits in a binary64 significand, counting the implicit leading one.
inline constexpr int kMantissaBits = 53;

/// Nearest binary64 to log10(2).
inline constexpr double kLog10Of2 = 0.30102999566398119521;

inline constexpr int kPowerTableSize = 326;
inline constexpr int kMaxTablePower = kPowerTableSize - 1;

/// Number of significant bits; zero has length 0.
std::size_t bit_length(const BigInt& x);

/// Exact decimal digit count of a nonnegative integer; zero has 1 digit.
std::size_t decimal_digits(const BigInt& x);

/// Immutable tables of 5^k and 10^k for 0 <= k <= 325.
///
/// The single instance is built during static initialization of the library
/// and is never modified afterwards, so lookups need no synchronization.
class PowerTables {
 public:
  static const PowerTables& instance();

  const BigInt& pow5(int k) const { return pow5_[static_cast<std::size_t>(k)]; }
  const BigInt& pow10(int k) const { return pow10_[static_cast<std::size_t>(k)]; }

  PowerTables(const PowerTables&) = delete;
  PowerTables& operator=(const PowerTables&) = delete;

 private:
  PowerTables();

  std::array<BigInt, kPowerTableSize> pow5_;
  std::array<BigInt, kPowerTableSize> pow10_;
};

/// 5^k. Table-backed up to k = 325, chained from table entries beyond that.
BigInt power_of5(std::int64_t k);
BigInt power_of10(std::int64_t k);

/// Allocation-free variants for the conversion paths: return a reference into
/// the table when possible, otherwise build the power in `storage`.
const BigInt& power_of5(std::int64_t k, BigInt& storage);
const BigInt& power_of10(std::int64_t k, BigInt& storage);

/// Significant bits of a machine word.
constexpr int width(std::uint64_t x) { return static_cast<int>(std::bit_width(x)); }

namespace detail {

/// Round-half-to-even decision shared by every quotient routine.
/// `twice_rem_vs_den` is the sign of (2 * remainder - denominator).
constexpr bool round_up(bool quotient_odd, int twice_rem_vs_den) {
  return quotient_odd ? twice_rem_vs_den >= 0 : twice_rem_vs_den > 0;
}

}  // namespace detail

/// Nearest integer to num/den with ties to even, for num >= 0, den > 0.
///
/// The rounded quotient must fit in 63 bits. Throws std::domain_error when
/// den is zero.
std::int64_t round_quotient(const BigInt& num, const BigInt& den);

/// Same rounding with no width limit on the result.
BigInt round_quotient_big(const BigInt& num, const BigInt& den);

/// Instrumented form used by the conversion paths: counts the division and
/// records operand widths and the quotient-length excess in `stats`.
std::int64_t round_quotient(const BigInt& num, const BigInt& den,
                            ConversionStats* stats);

/// Machine-word form for operands that already fit in 64 bits.
std::uint64_t round_quotient(std::uint64_t num, std::uint64_t den);

}  // namespace ezfloat
