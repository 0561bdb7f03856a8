#include "ezfloat/writer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ezfloat/reader.hpp"
#include "support/reference.hpp"

namespace ezfloat {
namespace {

using testing::bits;
using testing::from_bits;

constexpr double kLeastSubnormal = 0x0.0000000000001p-1022;

std::vector<double> random_finite(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  while (out.size() < n) {
    const double f = from_bits(rng());
    if (std::isfinite(f)) out.push_back(f);
  }
  return out;
}

TEST(UnpackDouble, Examples) {
  const UnpackedDouble one = unpack_double(1.0);
  EXPECT_FALSE(one.negative);
  EXPECT_EQ(one.mantissa, std::uint64_t{1} << 52);
  EXPECT_EQ(one.exponent, -52);
  EXPECT_EQ(one.kind, DoubleKind::kNormal);

  const UnpackedDouble least = unpack_double(kLeastSubnormal);
  EXPECT_EQ(least.mantissa, 1u);
  EXPECT_EQ(least.exponent, -1074);
  EXPECT_EQ(least.kind, DoubleKind::kSubnormal);

  const UnpackedDouble nz = unpack_double(-0.0);
  EXPECT_TRUE(nz.negative);
  EXPECT_EQ(nz.mantissa, 0u);
  EXPECT_EQ(nz.exponent, -1074);
  EXPECT_EQ(nz.kind, DoubleKind::kZero);

  EXPECT_EQ(unpack_double(std::numeric_limits<double>::infinity()).kind, DoubleKind::kInfinite);
  EXPECT_EQ(unpack_double(std::nan("")).kind, DoubleKind::kNaN);
}

TEST(UnpackDoubleProperty, RepackRoundTrips) {
  for (const double f : random_finite(100000, 3)) {
    const UnpackedDouble u = unpack_double(f);
    ASSERT_EQ(bits(repack_double(u)), bits(f));
    // value = mantissa * 2^exponent exactly
    ASSERT_EQ(std::ldexp(static_cast<double>(u.mantissa), u.exponent), std::fabs(f));
  }
}

TEST(ShortestDigits, Examples) {
  EXPECT_EQ(shortest_digits(1.0), (ShortestDigits{1'000'000'000'000'000, -15}));
  EXPECT_EQ(shortest_digits(0.1), (ShortestDigits{1'000'000'000'000'000, -16}));

  ConversionStats stats;
  EXPECT_EQ(shortest_digits(kLeastSubnormal, {}, &stats), (ShortestDigits{5, -324}));
  EXPECT_EQ(stats.fallbacks, 1);
}

TEST(FormatSci, Examples) {
  EXPECT_EQ(format_sci(false, 1'000'000'000'000'000, -15), "1.0E0");
  EXPECT_EQ(format_sci(false, 5, -324), "5.0E-324");
  EXPECT_EQ(format_sci(true, 17976931348623157, 292), "-1.7976931348623157E308");
  EXPECT_EQ(format_sci(false, 5, -324, WriterOptions::listing_compatible()), "5.E-324");
  EXPECT_EQ(format_sci(false, 120, 0), "1.2E2");
}

TEST(DoubleToString, Examples) {
  EXPECT_EQ(double_to_string(std::nan("")), "NaN");
  EXPECT_EQ(double_to_string(kLeastSubnormal), "5.0E-324");
  EXPECT_EQ(double_to_string(1.0), "1.0E0");
  EXPECT_EQ(double_to_string(std::numeric_limits<double>::infinity()), "Infinity");
  EXPECT_EQ(double_to_string(-std::numeric_limits<double>::infinity()), "-Infinity");
  EXPECT_EQ(double_to_string(0.0), "0.0");
  EXPECT_EQ(double_to_string(-0.0), "-0.0");
  EXPECT_EQ(double_to_string(-0.0, WriterOptions::listing_compatible()), "0.0");
  EXPECT_EQ(double_to_string(0.3), "3.0E-1");
  EXPECT_EQ(double_to_string(1e23), "1.0E23");
  EXPECT_EQ(double_to_string(5e-324, WriterOptions::listing_compatible()), "5.E-324");
}

TEST(DoubleToStringFast, MatchesGeneralPath) {
  EXPECT_EQ(double_to_string_fast(1.0), "1.0E0");
  EXPECT_EQ(double_to_string_fast(3.0e15), double_to_string(3.0e15));
  EXPECT_EQ(double_to_string_fast(0.1), "1.0E-1");
  for (const double f : random_finite(100000, 31)) {
    ASSERT_EQ(double_to_string_fast(f), double_to_string(f)) << std::hexfloat << f;
  }
  // Small integers and short decimals are where the word path applies.
  for (int i = -2000; i <= 2000; ++i) {
    const double f = i / 8.0;
    ASSERT_EQ(double_to_string_fast(f), double_to_string(f));
  }
}

TEST(DecimalExponent, BranchTransitions) {
  EXPECT_EQ(estimate_decimal_exponent(1), 1);
  EXPECT_EQ(estimate_decimal_exponent(3), 1);
  EXPECT_EQ(estimate_decimal_exponent(4), 2);
  EXPECT_EQ(estimate_decimal_exponent(-1), 0);
  EXPECT_EQ(estimate_decimal_exponent(-4), -1);
}

// The shortest round-trip digits are unique in length; among equal-length
// candidates std::to_chars picks the nearest, as does the writer.
TEST(WriterOracle, AgreesWithToChars) {
  for (const double f : random_finite(1000000, 41)) {
    if (f == 0.0) continue;
    const ShortestDigits sd = shortest_digits(f);
    testing::CharsDigits ref = testing::to_chars_digits(f);
    std::uint64_t d = sd.digits;
    int p = sd.point;
    while (d % 10 == 0) {
      d /= 10;
      ++p;
    }
    ASSERT_EQ(d, ref.digits) << std::hexfloat << f;
    ASSERT_EQ(p, ref.point) << std::hexfloat << f;
  }
}

TEST(WriterProperty, RoundTripsWithinFourDivisions) {
  auto values = random_finite(100000, 43);
  for (int e = -1074; e <= 1023; ++e) values.push_back(std::ldexp(1.0, e));
  int max_divisions = 0;
  for (const double f : values) {
    ConversionStats stats;
    const std::string s = double_to_string(f, {}, &stats);
    ASSERT_EQ(bits(read_double(s)), bits(f)) << s;
    ASSERT_LE(stats.divisions, 4) << s;
    max_divisions = std::max(max_divisions, stats.divisions);
  }
  EXPECT_EQ(max_divisions, 4);
}

TEST(WriterProperty, PowersOfTenVariantAgrees) {
  for (const double f : random_finite(20000, 47)) {
    if (f == 0.0) continue;
    ASSERT_EQ(shortest_digits_pow10(f), shortest_digits(f)) << std::hexfloat << f;
  }
  for (int e = -1074; e <= 1023; ++e) {
    const double f = std::ldexp(1.0, e);
    ASSERT_EQ(shortest_digits_pow10(f), shortest_digits(f)) << e;
  }
}

// Skipping the first attempt always reads back, at the cost of sometimes
// one extra digit.
TEST(WriterOptionsTest, SkipFirstAttemptStillRoundTrips) {
  WriterOptions options;
  options.skip_first_attempt = true;
  for (const double f : random_finite(20000, 53)) {
    if (f == 0.0) continue;
    const ShortestDigits quick = shortest_digits(f, options);
    ASSERT_EQ(bits(decimal_to_double_pow5(BigInt(static_cast<unsigned long>(quick.digits)),
                                          quick.point)),
              bits(std::fabs(f)));
  }
}

}  // namespace
}  // namespace ezfloat
