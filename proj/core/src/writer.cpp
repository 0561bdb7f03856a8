#include "ezfloat/writer.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "ezfloat/bigmath.hpp"
#include "ezfloat/reader.hpp"

namespace ezfloat {

namespace {

constexpr std::uint64_t kFractionMask = (std::uint64_t{1} << 52) - 1;
constexpr std::uint64_t kHiddenBit = std::uint64_t{1} << 52;

}  // namespace

UnpackedDouble unpack_double(double f) {
  const auto bits = std::bit_cast<std::uint64_t>(f);
  const auto biased = static_cast<int>((bits >> 52) & 0x7ff);
  const std::uint64_t fraction = bits & kFractionMask;

  UnpackedDouble u;
  u.negative = (bits >> 63) != 0;
  if (biased == 0x7ff) {
    u.kind = fraction != 0 ? DoubleKind::kNaN : DoubleKind::kInfinite;
    u.mantissa = fraction;
    return u;
  }
  u.mantissa = fraction + (biased == 0 ? 0 : kHiddenBit);
  u.exponent = biased - 1023 - 52 + (biased == 0 ? 1 : 0);
  if (biased != 0) {
    u.kind = DoubleKind::kNormal;
  } else {
    u.kind = fraction != 0 ? DoubleKind::kSubnormal : DoubleKind::kZero;
  }
  return u;
}

double repack_double(const UnpackedDouble& u) {
  std::uint64_t bits = u.negative ? std::uint64_t{1} << 63 : 0;
  if (u.mantissa >= kHiddenBit) {
    const auto biased = static_cast<std::uint64_t>(u.exponent + 1075);
    bits |= (biased << 52) | (u.mantissa & kFractionMask);
  } else {
    bits |= u.mantissa;
  }
  return std::bit_cast<double>(bits);
}

int estimate_decimal_exponent(int e2) {
  return static_cast<int>(std::ceil(e2 * kLog10Of2));
}

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

struct WriterWork {
  BigInt mant;
  BigInt num;
  BigInt den;
  BigInt power;
  BigInt scratch;
};

WriterWork& writer_work() {
  thread_local WriterWork w;
  return w;
}

// At a binade boundary (significand exactly 2^52, not the least normal
// binade) the gap below is half the gap above, so a candidate reads back
// iff f - ulp/4 <= c <= f + ulp/2, both ends inclusive since 2^52 is even.
bool is_binade_boundary(const UnpackedDouble& u) {
  return u.mantissa == kHiddenBit && u.exponent > -1074;
}

// Exact read-back test for a binade-boundary f represented as num/den at
// the candidate's decimal scale: with t = q*den - num the conditions are
// 2^54*t >= -num and 2^53*t <= num.
bool boundary_accepts(std::uint64_t q, const BigInt& num, const BigInt& den, BigInt& t) {
  mpz_mul_ui(t.get_mpz_t(), den.get_mpz_t(), q);
  t -= num;
  if (sgn(t) >= 0) {
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 53);
    return cmp(t, num) <= 0;
  }
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 54);
  t += num;
  return sgn(t) >= 0;
}

// Binade boundaries: the nearest digits at the extra-digit scale can fall
// below the narrow lower half-gap. Then the ceiling neighbour is tried, and
// failing that one more digit, which always lands inside.
ShortestDigits boundary_digits(WriterWork& w, int point, bool power_divisor,
                               const WriterOptions& options, ConversionStats* stats) {
  const auto observe = [&](const BigInt& x) {
    if (stats != nullptr) stats->observe_bits(bit_length(x));
  };
  // Moves num/den * 10^point to num*10/den * 10^(point-1) or, for the
  // powers-of-five divisor, num*2 / (den/5).
  const auto next_digit = [&] {
    --point;
    if (power_divisor && point >= 0) {
      mpz_mul_2exp(w.num.get_mpz_t(), w.num.get_mpz_t(), 1);
      w.den = power_of5(point, w.power);
    } else {
      w.num *= 10;
    }
    observe(w.num);
    if (stats != nullptr) ++stats->fallbacks;
  };
  if (options.skip_first_attempt) next_digit();
  auto q = static_cast<std::uint64_t>(round_quotient(w.num, w.den, stats));
  if (boundary_accepts(q, w.num, w.den, w.scratch)) return {q, point};
  if (!options.skip_first_attempt) {
    next_digit();
    q = static_cast<std::uint64_t>(round_quotient(w.num, w.den, stats));
    if (boundary_accepts(q, w.num, w.den, w.scratch)) return {q, point};
  }
  if (boundary_accepts(q + 1, w.num, w.den, w.scratch)) return {q + 1, point};
  next_digit();
  q = static_cast<std::uint64_t>(round_quotient(w.num, w.den, stats));
  return {q, point};
}

// Digits for the power-of-five writer. `target` is |f|.
ShortestDigits general_digits(const UnpackedDouble& u, double target,
                              const WriterOptions& options, ConversionStats* stats) {
  WriterWork& w = writer_work();
  mpz_set_ui(w.mant.get_mpz_t(), u.mantissa);
  const int e2 = u.exponent;
  int point = estimate_decimal_exponent(e2);
  std::int64_t lquo = 0;
  const auto reads_back = [&] {
    return same_bits(decimal_to_double_pow5(BigInt(lquo), point, stats), target);
  };
  const auto observe = [&](const BigInt& x) {
    if (stats != nullptr) stats->observe_bits(bit_length(x));
  };

  if (e2 > 0) {
    mpz_mul_2exp(w.num.get_mpz_t(), w.mant.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(e2 - point));
    observe(w.num);
    if (is_binade_boundary(u)) {
      w.den = power_of5(point, w.power);
      return boundary_digits(w, point, true, options, stats);
    }
    bool done = false;
    if (!options.skip_first_attempt) {
      lquo = round_quotient(w.num, power_of5(point, w.power), stats);
      done = reads_back();
    }
    if (!done) {
      // Divisor effectively divided by ten: one more digit.
      if (stats != nullptr && !options.skip_first_attempt) ++stats->fallbacks;
      mpz_mul_2exp(w.num.get_mpz_t(), w.num.get_mpz_t(), 1);
      observe(w.num);
      --point;
      lquo = round_quotient(w.num, power_of5(point, w.power), stats);
    }
  } else {
    mpz_mul(w.num.get_mpz_t(), w.mant.get_mpz_t(), power_of5(-point, w.power).get_mpz_t());
    w.den = 1;
    mpz_mul_2exp(w.den.get_mpz_t(), w.den.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(point - e2));
    observe(w.num);
    if (is_binade_boundary(u)) return boundary_digits(w, point, false, options, stats);
    bool done = false;
    if (!options.skip_first_attempt) {
      lquo = round_quotient(w.num, w.den, stats);
      done = reads_back();
    }
    if (!done) {
      if (stats != nullptr && !options.skip_first_attempt) ++stats->fallbacks;
      --point;
      w.num *= 10;
      observe(w.num);
      lquo = round_quotient(w.num, w.den, stats);
    }
  }
  return {static_cast<std::uint64_t>(lquo), point};
}

constexpr int kWordPowers = 28;  // 5^27 < 2^63

constexpr std::array<std::uint64_t, kWordPowers> make_word_pow5() {
  std::array<std::uint64_t, kWordPowers> table{};
  table[0] = 1;
  for (std::size_t k = 1; k < table.size(); ++k) table[k] = table[k - 1] * 5;
  return table;
}

constexpr auto kWordPow5 = make_word_pow5();

// Same computation as general_digits in 64-bit arithmetic. Empty when some
// intermediate would not fit.
std::optional<ShortestDigits> word_digits(const UnpackedDouble& u, double target,
                                          const WriterOptions& options,
                                          ConversionStats* stats) {
  if (is_binade_boundary(u)) return std::nullopt;
  const int e2 = u.exponent;
  int point = estimate_decimal_exponent(e2);
  const std::uint64_t mant = u.mantissa;
  ConversionStats local;
  ConversionStats* const local_stats = stats != nullptr ? &local : nullptr;

  std::uint64_t num = 0;
  std::uint64_t den = 0;
  std::uint64_t retry_num = 0;
  std::uint64_t retry_den = 0;
  if (e2 > 0) {
    const int shift = e2 - point;
    if (point >= kWordPowers || width(mant) + shift + 1 > 64) return std::nullopt;
    num = mant << shift;
    den = kWordPow5[static_cast<std::size_t>(point)];
    retry_num = num << 1;
    retry_den = kWordPow5[static_cast<std::size_t>(point - 1)];
  } else {
    const int den_shift = point - e2;
    if (-point >= kWordPowers || den_shift > 63) return std::nullopt;
    if (__builtin_mul_overflow(mant, kWordPow5[static_cast<std::size_t>(-point)], &num))
      return std::nullopt;
    if (__builtin_mul_overflow(num, std::uint64_t{10}, &retry_num)) return std::nullopt;
    den = std::uint64_t{1} << den_shift;
    retry_den = den;
  }

  const auto divide = [&](std::uint64_t n, std::uint64_t d) {
    if (local_stats != nullptr) {
      ++local_stats->divisions;
      local_stats->observe_bits(static_cast<std::size_t>(width(n)));
      local_stats->observe_bits(static_cast<std::size_t>(width(d)));
    }
    return round_quotient(n, d);
  };

  std::uint64_t lquo = 0;
  bool done = false;
  if (!options.skip_first_attempt) {
    lquo = divide(num, den);
    double back = 0.0;
    if (!decimal_to_double_word(lquo, point, back, local_stats)) return std::nullopt;
    done = same_bits(back, target);
  }
  if (!done) {
    if (local_stats != nullptr && !options.skip_first_attempt) ++local_stats->fallbacks;
    --point;
    lquo = divide(retry_num, retry_den);
  }
  if (stats != nullptr) stats->merge(local);
  return ShortestDigits{lquo, point};
}

}  // namespace

ShortestDigits shortest_digits(double f, const WriterOptions& options,
                               ConversionStats* stats) {
  const UnpackedDouble u = unpack_double(f);
  if (u.kind != DoubleKind::kNormal && u.kind != DoubleKind::kSubnormal)
    throw std::invalid_argument("shortest_digits: value must be finite and nonzero");
  const double target = std::fabs(f);

  std::optional<ShortestDigits> result;
  if (options.word_fast_path) result = word_digits(u, target, options, stats);
  if (!result) result = general_digits(u, target, options, stats);

  if (options.verify_fallback &&
      !same_bits(decimal_to_double_pow5(BigInt(result->digits), result->point), target))
    throw std::logic_error("shortest_digits: extra-digit quotient does not read back");
  return *result;
}

ShortestDigits shortest_digits_pow10(double f, ConversionStats* stats) {
  const UnpackedDouble u = unpack_double(f);
  if (u.kind != DoubleKind::kNormal && u.kind != DoubleKind::kSubnormal)
    throw std::invalid_argument("shortest_digits_pow10: value must be finite and nonzero");
  const double target = std::fabs(f);
  const BigInt mant(static_cast<unsigned long>(u.mantissa));
  const int e2 = u.exponent;
  int point = estimate_decimal_exponent(e2);
  const auto observe = [&](const BigInt& x) {
    if (stats != nullptr) stats->observe_bits(bit_length(x));
  };
  const auto reads_back = [&](std::int64_t lquo) {
    return same_bits(decimal_to_double_pow10(BigInt(lquo), point, stats), target);
  };

  if (is_binade_boundary(u)) {
    WriterWork& w = writer_work();
    if (e2 > 0) {
      w.num = mant << static_cast<mp_bitcnt_t>(e2);
      w.den = power_of10(point);
    } else {
      w.num = mant * power_of10(-point);
      w.den = BigInt(1) << static_cast<mp_bitcnt_t>(-e2);
    }
    observe(w.num);
    observe(w.den);
    return boundary_digits(w, point, false, WriterOptions{}, stats);
  }

  std::int64_t lquo = 0;
  if (e2 > 0) {
    const BigInt num = mant << static_cast<mp_bitcnt_t>(e2);
    observe(num);
    lquo = round_quotient(num, power_of10(point), stats);
    if (!reads_back(lquo)) {
      if (stats != nullptr) ++stats->fallbacks;
      --point;
      lquo = round_quotient(num, power_of10(point), stats);
    }
  } else {
    BigInt num = mant * power_of10(-point);
    const BigInt den = BigInt(1) << static_cast<mp_bitcnt_t>(-e2);
    observe(num);
    observe(den);
    lquo = round_quotient(num, den, stats);
    if (!reads_back(lquo)) {
      if (stats != nullptr) ++stats->fallbacks;
      --point;
      num *= 10;
      observe(num);
      lquo = round_quotient(num, den, stats);
    }
  }
  return {static_cast<std::uint64_t>(lquo), point};
}

std::string format_sci(bool negative, std::uint64_t digits, int point,
                       const WriterOptions& options) {
  char sman[24];
  const auto [end, ec] = std::to_chars(sman, sman + sizeof sman, digits);
  (void)ec;
  const auto len = static_cast<int>(end - sman);
  int lent = len;
  while (lent > 1 && sman[lent - 1] == '0') --lent;

  std::string out;
  out.reserve(26);
  if (negative) out.push_back('-');
  out.push_back(sman[0]);
  out.push_back('.');
  if (lent > 1) {
    out.append(sman + 1, sman + lent);
  } else if (!options.unpadded_single_digit) {
    out.push_back('0');
  }
  out.push_back('E');
  char exponent[12];
  const auto [exp_end, exp_ec] = std::to_chars(exponent, exponent + sizeof exponent, point + len - 1);
  (void)exp_ec;
  out.append(exponent, exp_end);
  return out;
}

std::string double_to_string(double f, const WriterOptions& options,
                             ConversionStats* stats) {
  const UnpackedDouble u = unpack_double(f);
  switch (u.kind) {
    case DoubleKind::kNaN:
      return "NaN";
    case DoubleKind::kInfinite:
      return u.negative ? "-Infinity" : "Infinity";
    case DoubleKind::kZero:
      return u.negative && !options.unsigned_zero ? "-0.0" : "0.0";
    case DoubleKind::kSubnormal:
    case DoubleKind::kNormal:
      break;
  }
  const ShortestDigits sd = shortest_digits(f, options, stats);
  return format_sci(u.negative, sd.digits, sd.point, options);
}

std::string double_to_string_fast(double f, const WriterOptions& options) {
  WriterOptions fast = options;
  fast.word_fast_path = true;
  return double_to_string(f, fast);
}

}  // namespace ezfloat
