#include "ezfloat/reader.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>

namespace ezfloat {

namespace {

constexpr std::int64_t kMinScale = -1074;  // weight of the least subnormal bit
constexpr std::int64_t kMaxExponent = 1023;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

// quo * 2^scale, where the caller guarantees the product is representable
// unless it overflows.
double scaled(std::uint64_t quo, std::int64_t scale) {
  if (quo == 0) return 0.0;
  const std::int64_t top = width(quo) - 1 + scale;
  if (top > kMaxExponent) return kInfinity;
  return std::ldexp(static_cast<double>(quo), static_cast<int>(scale));
}

enum class Clamp { kNone, kZero, kInfinity };

// Values that cannot reach a finite nonzero double. The smallest half-ulp is
// 2^-1075 (about 2.47e-324), so anything below 10^-324 reads as zero.
Clamp clamp(const BigInt& mant, std::int64_t point) {
  if (sgn(mant) == 0) return Clamp::kZero;
  if (point >= 309) return Clamp::kInfinity;
  if (point < -324) {
    const auto digits = static_cast<std::int64_t>(decimal_digits(mant));
    if (point + digits <= -324) return Clamp::kZero;
  } else if (point > 0) {
    const auto upper = static_cast<std::int64_t>(mpz_sizeinbase(mant.get_mpz_t(), 10));
    if (point + upper - 1 >= 309 &&
        point + static_cast<std::int64_t>(decimal_digits(mant)) - 1 >= 309)
      return Clamp::kInfinity;
  }
  return Clamp::kNone;
}

struct Work {
  BigInt num;
  BigInt den;
  BigInt power;
};

Work& work() {
  thread_local Work w;
  return w;
}

// Rounded mant * 2^shift / (scl * 2^den_shift), with the power of two moved
// to whichever side keeps both operands integral.
std::int64_t shifted_quotient(const BigInt& mant, const BigInt& scl, std::int64_t shift,
                              std::int64_t den_shift, Work& w, ConversionStats* stats) {
  const BigInt* num = &mant;
  if (shift > 0) {
    mpz_mul_2exp(w.num.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    num = &w.num;
  } else {
    den_shift -= shift;
  }
  const BigInt* den = &scl;
  if (den_shift > 0) {
    mpz_mul_2exp(w.den.get_mpz_t(), scl.get_mpz_t(), static_cast<mp_bitcnt_t>(den_shift));
    den = &w.den;
  }
  return round_quotient(*num, *den, stats);
}

// Shared body of both variants. With kFactorTwos the decimal scale is split
// as 10^point = 5^point * 2^point and the power of two goes into the final
// binary exponent.
template <bool kFactorTwos>
double convert(const BigInt& mant, std::int64_t point, ConversionStats* stats) {
  switch (clamp(mant, point)) {
    case Clamp::kZero:
      return 0.0;
    case Clamp::kInfinity:
      return kInfinity;
    case Clamp::kNone:
      break;
  }

  Work& w = work();
  const std::int64_t twos = kFactorTwos ? point : 0;
  const auto power = [&](std::int64_t k) -> const BigInt& {
    return kFactorTwos ? power_of5(k, w.power) : power_of10(k, w.power);
  };

  if (point >= 0) {
    const BigInt& scale = power(point);
    mpz_mul(w.num.get_mpz_t(), mant.get_mpz_t(), scale.get_mpz_t());
    const auto bex = static_cast<std::int64_t>(bit_length(w.num)) - kMantissaBits;
    if (stats != nullptr) {
      stats->observe_bits(bit_length(scale));
      stats->observe_bits(bit_length(w.num));
    }
    if (bex <= 0) return scaled(mpz_get_ui(w.num.get_mpz_t()), twos);
    w.den = 1;
    mpz_mul_2exp(w.den.get_mpz_t(), w.den.get_mpz_t(), static_cast<mp_bitcnt_t>(bex));
    const std::int64_t quo = round_quotient(w.num, w.den, stats);
    return scaled(static_cast<std::uint64_t>(quo), bex + twos);
  }

  const BigInt& scl = power(-point);
  if (stats != nullptr) stats->observe_bits(bit_length(scl));
  std::int64_t bex = static_cast<std::int64_t>(bit_length(mant)) -
                     static_cast<std::int64_t>(bit_length(scl)) - kMantissaBits;

  if (bex + twos < kMinScale) {
    // Below the normal range: round once at the subnormal bit position.
    const std::int64_t quo = shifted_quotient(mant, scl, twos - kMinScale, 0, w, stats);
    return scaled(static_cast<std::uint64_t>(quo), kMinScale);
  }

  std::int64_t quo = shifted_quotient(mant, scl, -bex, 0, w, stats);
  if (width(static_cast<std::uint64_t>(quo)) > kMantissaBits) {
    if (stats != nullptr) ++stats->retries;
    quo = shifted_quotient(mant, scl, -bex, 1, w, stats);
    ++bex;
  }
  return scaled(static_cast<std::uint64_t>(quo), bex + twos);
}

constexpr int kWordPowers = 28;  // 5^27 < 2^63

constexpr std::array<std::uint64_t, kWordPowers> make_word_pow5() {
  std::array<std::uint64_t, kWordPowers> table{};
  table[0] = 1;
  for (std::size_t k = 1; k < table.size(); ++k) table[k] = table[k - 1] * 5;
  return table;
}

constexpr auto kWordPow5 = make_word_pow5();

void count_word_division(ConversionStats* stats, std::uint64_t num, std::uint64_t den,
                         std::uint64_t quo) {
  if (stats == nullptr) return;
  ++stats->divisions;
  const int n = width(num);
  const int m = width(den);
  stats->observe_bits(static_cast<std::size_t>(n));
  stats->observe_bits(static_cast<std::size_t>(m));
  if (n >= m)
    stats->max_quotient_excess =
        std::max(stats->max_quotient_excess, width(quo) - (n - m));
}

}  // namespace

double decimal_to_double_pow5(const BigInt& mant, std::int64_t point,
                              ConversionStats* stats) {
  return convert<true>(mant, point, stats);
}

double decimal_to_double_pow10(const BigInt& mant, std::int64_t point,
                               ConversionStats* stats) {
  return convert<false>(mant, point, stats);
}

bool decimal_to_double_word(std::uint64_t mant, std::int64_t point, double& out,
                            ConversionStats* stats) {
  if (mant == 0) {
    out = 0.0;
    return true;
  }
  if (point >= kWordPowers || -point >= kWordPowers) return false;

  if (point >= 0) {
    std::uint64_t num = 0;
    if (__builtin_mul_overflow(mant, kWordPow5[static_cast<std::size_t>(point)], &num))
      return false;
    const int bex = width(num) - kMantissaBits;
    if (stats != nullptr) stats->observe_bits(static_cast<std::size_t>(width(num)));
    if (bex <= 0) {
      out = scaled(num, point);
      return true;
    }
    const std::uint64_t den = std::uint64_t{1} << bex;
    const std::uint64_t quo = round_quotient(num, den);
    count_word_division(stats, num, den, quo);
    out = scaled(quo, bex + point);
    return true;
  }

  const std::uint64_t scl = kWordPow5[static_cast<std::size_t>(-point)];
  int bex = width(mant) - width(scl) - kMantissaBits;
  if (bex + point < kMinScale) return false;
  // Headroom for the retry, which doubles the divisor.
  if (-bex > 0 && width(mant) - bex > 64) return false;
  if (bex >= 0 && width(scl) + bex + 1 > 64) return false;
  if (width(scl) + 1 > 64) return false;

  const auto quotient = [&](int extra) {
    std::uint64_t num = mant;
    std::uint64_t den = scl << extra;
    if (bex < 0) {
      num <<= -bex;
    } else {
      den <<= bex;
    }
    const std::uint64_t quo = round_quotient(num, den);
    count_word_division(stats, num, den, quo);
    return quo;
  };
  std::uint64_t quo = quotient(0);
  if (width(quo) > kMantissaBits) {
    if (stats != nullptr) ++stats->retries;
    quo = quotient(1);
    ++bex;
  }
  out = scaled(quo, bex + point);
  return true;
}

double to_double(const DecimalSci& decimal, ConversionStats* stats) {
  const double magnitude = decimal_to_double_pow5(decimal.mant, decimal.point, stats);
  return decimal.negative ? -magnitude : magnitude;
}

namespace {

double special_to_double(SpecialValue v) {
  switch (v) {
    case SpecialValue::kNaN:
      return std::numeric_limits<double>::quiet_NaN();
    case SpecialValue::kPositiveInfinity:
      return kInfinity;
    case SpecialValue::kNegativeInfinity:
      return -kInfinity;
  }
  return 0.0;
}

}  // namespace

double read_double(std::string_view text) {
  const ParsedNumber parsed = parse_decimal(text);
  if (const auto* special = std::get_if<SpecialValue>(&parsed))
    return special_to_double(*special);
  return to_double(std::get<DecimalSci>(parsed));
}

ReadOutcome read_double_with_stats(std::string_view text) {
  ReadOutcome outcome;
  const ParsedNumber parsed = parse_decimal(text);
  if (const auto* special = std::get_if<SpecialValue>(&parsed)) {
    outcome.value = special_to_double(*special);
  } else {
    outcome.value = to_double(std::get<DecimalSci>(parsed), &outcome.stats);
  }
  return outcome;
}

}  // namespace ezfloat
