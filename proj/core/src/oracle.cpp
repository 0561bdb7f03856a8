#include "ezfloat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <ostream>
#include <thread>

#include "ezfloat/reader.hpp"

namespace ezfloat::oracle {

namespace {

BigInt pow_ui(unsigned long base, std::int64_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, static_cast<unsigned long>(exponent));
  return result;
}

BigInt shifted(const BigInt& x, std::int64_t bits) {
  BigInt result;
  mpz_mul_2exp(result.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return result;
}

std::int64_t bits_of(const BigInt& x) {
  return sgn(x) == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

std::int64_t digits_of(const BigInt& x) {
  return static_cast<std::int64_t>(x.get_str(10).size());
}

// Sign of (num / den) - 2^e.
int compare_with_power_of_two(const BigInt& num, const BigInt& den, std::int64_t e) {
  if (e >= 0) return cmp(num, shifted(den, e));
  return cmp(shifted(num, -e), den);
}

// Sign of (num / den) - 10^e.
int compare_with_power_of_ten(const BigInt& num, const BigInt& den, std::int64_t e) {
  if (e >= 0) return cmp(num, den * pow_ui(10, e));
  return cmp(num * pow_ui(10, -e), den);
}

double from_bits(std::uint64_t bits) { return std::bit_cast<double>(bits); }

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

ExactRational to_rational(const DecimalSci& d) {
  ExactRational r;
  r.negative = d.negative;
  if (d.point >= 0) {
    r.num = d.mant * pow_ui(10, d.point);
    r.den = 1;
  } else {
    r.num = d.mant;
    r.den = pow_ui(10, -d.point);
  }
  return r;
}

ExactRational to_rational(double f) {
  const auto bits = std::bit_cast<std::uint64_t>(f);
  const auto biased = static_cast<std::int64_t>((bits >> 52) & 0x7ff);
  std::uint64_t significand = bits & ((std::uint64_t{1} << 52) - 1);
  std::int64_t e2 = -1074;
  if (biased != 0) {
    significand |= std::uint64_t{1} << 52;
    e2 = biased - 1075;
  }
  ExactRational r;
  r.negative = (bits >> 63) != 0;
  r.num = BigInt(static_cast<unsigned long>(significand));
  if (e2 >= 0) {
    r.num = shifted(r.num, e2);
  } else {
    r.den = shifted(BigInt(1), -e2);
  }
  return r;
}

double nearest_double(const ExactRational& r) {
  const double sign = r.negative ? -1.0 : 1.0;
  if (sgn(r.num) == 0) return std::copysign(0.0, sign);

  // At or beyond the midpoint between the largest double and 2^1024.
  const BigInt overflow_threshold = shifted(BigInt(1), 1024) - shifted(BigInt(1), 970);
  if (cmp(r.num, r.den * overflow_threshold) >= 0) return sign * kInf;
  // At or below half the smallest subnormal; the tie goes to even zero.
  if (cmp(shifted(r.num, 1075), r.den) <= 0) return std::copysign(0.0, sign);

  // 2^e <= value < 2^(e+1)
  std::int64_t e = bits_of(r.num) - bits_of(r.den);
  if (compare_with_power_of_two(r.num, r.den, e) < 0) --e;

  std::int64_t scale = std::max<std::int64_t>(e - 52, -1074);
  BigInt q = scale >= 0 ? round_quotient_big(r.num, shifted(r.den, scale))
                        : round_quotient_big(shifted(r.num, -scale), r.den);
  const BigInt two53 = shifted(BigInt(1), 53);
  const BigInt two52 = shifted(BigInt(1), 52);
  if (q == two53) {
    q = two52;
    ++scale;
  }
  std::uint64_t bits = 0;
  if (q < two52) {
    bits = q.get_ui();  // subnormal, scale is -1074
  } else {
    const std::int64_t biased = scale + 1075;
    if (biased >= 2047) return sign * kInf;
    const BigInt fraction = q - two52;
    bits = (static_cast<std::uint64_t>(biased) << 52) | fraction.get_ui();
  }
  return sign * from_bits(bits);
}

double nearest_double_exact(const DecimalSci& d) {
  const double sign = d.negative ? -1.0 : 1.0;
  if (sgn(d.mant) == 0) return std::copysign(0.0, sign);
  // Coarse bounds keep adversarial exponents from building huge powers.
  const std::int64_t digits = digits_of(d.mant);
  if (d.point + digits - 1 > 309) return sign * kInf;
  if (d.point + digits < -330) return std::copysign(0.0, sign);
  return nearest_double(to_rational(d));
}

namespace {

struct Neighbours {
  BigInt low;  // floor(V / 10^unit)
  std::int64_t unit = 0;
  bool exact = false;
};

// The two `digits`-digit decimals bracketing num/den.
Neighbours bracket(const BigInt& num, const BigInt& den, int digits) {
  // 10^k <= V < 10^(k+1)
  std::int64_t k = digits_of(num) - digits_of(den);
  while (compare_with_power_of_ten(num, den, k) < 0) --k;
  while (compare_with_power_of_ten(num, den, k + 1) >= 0) ++k;

  Neighbours n;
  n.unit = k - digits + 1;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (n.unit >= 0) {
    scaled_den *= pow_ui(10, n.unit);
  } else {
    scaled_num *= pow_ui(10, -n.unit);
  }
  BigInt remainder;
  mpz_fdiv_qr(n.low.get_mpz_t(), remainder.get_mpz_t(), scaled_num.get_mpz_t(),
              scaled_den.get_mpz_t());
  n.exact = sgn(remainder) == 0;
  return n;
}

bool reads_back(const BigInt& m, std::int64_t unit, double target) {
  DecimalSci d;
  d.mant = m;
  d.point = unit;
  return std::bit_cast<std::uint64_t>(nearest_double_exact(d)) ==
         std::bit_cast<std::uint64_t>(target);
}

ShortestDigits normalized(BigInt m, std::int64_t unit) {
  while (sgn(m) != 0 && mpz_divisible_ui_p(m.get_mpz_t(), 10) != 0) {
    m /= 10;
    ++unit;
  }
  return {m.get_ui(), static_cast<int>(unit)};
}

}  // namespace

bool minimality_check(double f, int produced_digits) {
  const double target = std::fabs(f);
  const ExactRational v = to_rational(target);
  for (int d = 1; d < produced_digits; ++d) {
    const Neighbours n = bracket(v.num, v.den, d);
    if (reads_back(n.low, n.unit, target)) return false;
    if (!n.exact && reads_back(n.low + 1, n.unit, target)) return false;
  }
  return true;
}

ShortestDigits shortest_by_search(double f) {
  const double target = std::fabs(f);
  const ExactRational v = to_rational(target);
  for (int d = 1; d <= 17; ++d) {
    const Neighbours n = bracket(v.num, v.den, d);
    const BigInt high = n.low + 1;
    const bool low_ok = reads_back(n.low, n.unit, target);
    const bool high_ok = !n.exact && reads_back(high, n.unit, target);
    if (!low_ok && !high_ok) continue;
    if (low_ok != high_ok) return normalized(low_ok ? n.low : high, n.unit);
    // Both read back: take the nearer, ties to even. Compare 2V with
    // (2*low + 1) * 10^unit.
    BigInt lhs = 2 * v.num;
    BigInt rhs = (2 * n.low + 1) * v.den;
    if (n.unit >= 0) {
      rhs *= pow_ui(10, n.unit);
    } else {
      lhs *= pow_ui(10, -n.unit);
    }
    const int c = cmp(lhs, rhs);
    const bool take_low = c < 0 || (c == 0 && mpz_even_p(n.low.get_mpz_t()) != 0);
    return normalized(take_low ? n.low : high, n.unit);
  }
  return {};
}

int significant_digits(std::uint64_t digits) {
  if (digits == 0) return 0;
  while (digits % 10 == 0) digits /= 10;
  int count = 0;
  for (; digits != 0; digits /= 10) ++count;
  return count;
}

std::vector<double> all_ones_mantissa_values() {
  std::vector<double> values;
  values.reserve(2098);
  for (int k = 1; k <= 52; ++k) values.push_back(from_bits((std::uint64_t{1} << k) - 1));
  const std::uint64_t fraction = (std::uint64_t{1} << 52) - 1;
  for (std::uint64_t biased = 1; biased <= 2046; ++biased)
    values.push_back(from_bits((biased << 52) | fraction));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

namespace {

void check_reader(QuotientAudit& audit, double value, const char* stage,
                  const ConversionStats& stats, bool value_ok) {
  audit.max_retries_per_conversion =
      std::max(audit.max_retries_per_conversion, stats.retries);
  audit.max_quotient_excess = std::max(audit.max_quotient_excess, stats.max_quotient_excess);
  if (!value_ok || stats.max_quotient_excess > 1 || stats.retries > 1)
    audit.violations.push_back({value, stage, stats.max_quotient_excess, stats.retries});
}

void check_writer(QuotientAudit& audit, double value, const char* stage,
                  const ConversionStats& stats, bool value_ok) {
  audit.max_writer_quotient_excess =
      std::max(audit.max_writer_quotient_excess, stats.max_quotient_excess);
  if (!value_ok) audit.violations.push_back({value, stage, stats.max_quotient_excess, 0});
}

// value = num / 2^k exactly, so value = num * 5^k * 10^-k.
DecimalSci exact_decimal(double v) {
  const ExactRational r = to_rational(v);
  DecimalSci d;
  d.mant = r.num;
  const std::size_t k = mpz_scan1(r.den.get_mpz_t(), 0);
  if (k > 0) {
    BigInt five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, k);
    d.mant *= five;
  }
  d.point = -static_cast<std::int64_t>(k);
  return d;
}

QuotientAudit audit_range(const std::vector<double>& values, std::size_t begin,
                          std::size_t end) {
  QuotientAudit audit;
  WriterOptions options;
  options.verify_fallback = true;
  for (std::size_t i = begin; i < end; ++i) {
    const double v = values[i];
    ++audit.values_tested;

    ConversionStats write_stats;
    const ShortestDigits sd = shortest_digits(v, options, &write_stats);
    ConversionStats write10_stats;
    const ShortestDigits sd10 = shortest_digits_pow10(v, &write10_stats);
    check_writer(audit, v, "write", write_stats, true);
    check_writer(audit, v, "write10", write10_stats, sd10 == sd);

    const BigInt mant(static_cast<unsigned long>(sd.digits));
    ConversionStats read5;
    const double back5 = decimal_to_double_pow5(mant, sd.point, &read5);
    check_reader(audit, v, "read5", read5, back5 == v);
    ConversionStats read10;
    const double back10 = decimal_to_double_pow10(mant, sd.point, &read10);
    check_reader(audit, v, "read10", read10, back10 == v);

    const DecimalSci exact = exact_decimal(v);
    ConversionStats exact5;
    const double e5 = decimal_to_double_pow5(exact.mant, exact.point, &exact5);
    check_reader(audit, v, "exact5", exact5, e5 == v);
    ConversionStats exact10;
    const double e10 = decimal_to_double_pow10(exact.mant, exact.point, &exact10);
    check_reader(audit, v, "exact10", exact10, e10 == v);
  }
  return audit;
}

}  // namespace

QuotientAudit audit_quotient_lengths(unsigned threads) {
  const std::vector<double> values = all_ones_mantissa_values();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(values.size()));

  std::vector<std::future<QuotientAudit>> parts;
  const std::size_t chunk = (values.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < values.size(); begin += chunk) {
    const std::size_t end = std::min(values.size(), begin + chunk);
    parts.push_back(std::async(std::launch::async, audit_range, std::cref(values), begin, end));
  }

  QuotientAudit total;
  for (auto& part : parts) {
    QuotientAudit a = part.get();
    total.values_tested += a.values_tested;
    total.max_retries_per_conversion =
        std::max(total.max_retries_per_conversion, a.max_retries_per_conversion);
    total.max_quotient_excess = std::max(total.max_quotient_excess, a.max_quotient_excess);
    total.max_writer_quotient_excess =
        std::max(total.max_writer_quotient_excess, a.max_writer_quotient_excess);
    total.violations.insert(total.violations.end(), a.violations.begin(), a.violations.end());
  }
  return total;
}

void write_report(std::ostream& out, const QuotientAudit& audit) {
  for (const auto& v : audit.violations) {
    char hex[19];
    std::snprintf(hex, sizeof hex, "0x%016llX",
                  static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(v.value)));
    out << "VIOLATION " << hex << " stage=" << v.stage << " excess=" << v.quotient_excess
        << " retries=" << v.retries << '\n';
  }
  out << "values: " << audit.values_tested << " violations: " << audit.violations.size()
      << " max_retries: " << audit.max_retries_per_conversion
      << " max_quotient_excess: " << audit.max_quotient_excess
      << " writer_quotient_excess: " << audit.max_writer_quotient_excess << '\n';
}

}  // namespace ezfloat::oracle
