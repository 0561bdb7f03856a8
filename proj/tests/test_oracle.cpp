#include "ezfloat/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ezfloat/writer.hpp"
#include "support/reference.hpp"

namespace ezfloat::oracle {
namespace {

using testing::bits;

DecimalSci make(const BigInt& mant, std::int64_t point) {
  DecimalSci d;
  d.mant = mant;
  d.point = point;
  return d;
}

TEST(NearestDoubleExact, Examples) {
  EXPECT_EQ(nearest_double_exact(make(1, 0)), 1.0);
  EXPECT_EQ(bits(nearest_double_exact(make(5, -324))), 1u);
  // 2^-1075 = 5^1075 * 10^-1075 is the tie between 0 and the least subnormal.
  BigInt five = 1;
  for (int i = 0; i < 1075; ++i) five *= 5;
  EXPECT_EQ(bits(nearest_double_exact(make(five, -1075))), 0u);
  EXPECT_EQ(bits(nearest_double_exact(make(five * 10 + 1, -1076))), 1u);
}

TEST(NearestDoubleExact, AgreesWithLongDivision) {
  std::mt19937_64 rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const BigInt mant(static_cast<unsigned long>(rng() >> (rng() % 60)) | 1);
    const int point = -345 + static_cast<int>(rng() % 650);
    ASSERT_EQ(bits(nearest_double_exact(make(mant, point))),
              bits(testing::long_division_nearest(mant, point)))
        << mant.get_str() << 'e' << point;
  }
}

TEST(NearestDouble, SignAndExtremes) {
  DecimalSci d = make(25, -1);
  d.negative = true;
  EXPECT_EQ(nearest_double_exact(d), -2.5);
  EXPECT_TRUE(std::isinf(nearest_double_exact(make(1, 400))));
  EXPECT_EQ(nearest_double_exact(make(1, -400)), 0.0);
  // Exactly 2^1024 - 2^970 is the overflow tie and rounds to infinity.
  ExactRational r;
  r.num = (BigInt(1) << 1024) - (BigInt(1) << 970);
  EXPECT_TRUE(std::isinf(nearest_double(r)));
  r.num -= 1;
  EXPECT_EQ(bits(nearest_double(r)), 0x7FEFFFFFFFFFFFFFu);
}

TEST(ToRational, DoubleIsExact) {
  // 0.1 is 3602879701896397 / 2^55 exactly.
  const ExactRational r = to_rational(0.1);
  EXPECT_EQ(r.num * (BigInt(1) << 55), r.den * 3602879701896397);
  EXPECT_EQ(nearest_double(to_rational(-3.5)), -3.5);
}

TEST(MinimalityCheck, Examples) {
  EXPECT_TRUE(minimality_check(1.0, 1));
  EXPECT_TRUE(minimality_check(0x0.0000000000001p-1022, 1));
  EXPECT_TRUE(minimality_check(0.3, 1));
  // 0.3 does have a 1-digit form, so claiming 2 digits were needed fails.
  EXPECT_FALSE(minimality_check(0.3, 2));
  EXPECT_TRUE(minimality_check(0.1 + 0.2, 17));
  EXPECT_FALSE(minimality_check(0.1 + 0.2, 18));
}

TEST(ShortestBySearch, MatchesToChars) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 2000; ++i) {
    const double f = testing::from_bits(rng() & 0x7FFFFFFFFFFFFFFFull);
    if (!std::isfinite(f) || f == 0.0) continue;
    const ShortestDigits sd = shortest_by_search(f);
    const auto ref = testing::to_chars_digits(f);
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

TEST(SignificantDigits, TrailingZerosIgnored) {
  EXPECT_EQ(significant_digits(1'000'000'000'000'000), 1);
  EXPECT_EQ(significant_digits(120), 2);
  EXPECT_EQ(significant_digits(17976931348623157), 17);
}

TEST(AllOnesMantissa, Enumeration) {
  const auto values = all_ones_mantissa_values();
  EXPECT_GE(values.size(), 2098u);
  EXPECT_LE(values.size(), 2100u);
  EXPECT_TRUE(std::is_sorted(values.begin(), values.end()));
  EXPECT_EQ(std::set<double>(values.begin(), values.end()).size(), values.size());
  EXPECT_NE(std::find(values.begin(), values.end(), 9007199254740991.0), values.end());
  EXPECT_EQ(values.back(), std::numeric_limits<double>::max());
  for (const double f : values) {
    const std::uint64_t m = unpack_double(f).mantissa;
    ASSERT_EQ(m & (m + 1), 0u) << std::hexfloat << f;
  }
}

TEST(QuotientAudit, NoViolations) {
  const QuotientAudit audit = audit_quotient_lengths(2);
  EXPECT_EQ(audit.values_tested, all_ones_mantissa_values().size());
  EXPECT_TRUE(audit.violations.empty());
  EXPECT_LE(audit.max_retries_per_conversion, 1);
  EXPECT_LE(audit.max_quotient_excess, 1);
}

}  // namespace
}  // namespace ezfloat::oracle
