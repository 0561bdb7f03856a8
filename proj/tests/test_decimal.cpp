#include "ezfloat/decimal.hpp"

#include <gtest/gtest.h>

#include <string>

namespace ezfloat {
namespace {

DecimalSci sci(const std::string& text) { return std::get<DecimalSci>(parse_decimal(text)); }

DecimalSci make(bool negative, const char* mant, std::int64_t point) {
  DecimalSci d;
  d.negative = negative;
  d.mant.set_str(mant, 10);
  d.point = point;
  return d;
}

std::size_t error_position(const std::string& text) {
  try {
    parse_decimal(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return 0;
}

TEST(ParseDecimal, Examples) {
  EXPECT_EQ(sci("1.5E3"), make(false, "15", 2));
  EXPECT_EQ(sci("5E-324"), make(false, "5", -324));
  EXPECT_EQ(sci("-0.0"), make(true, "0", 0));
}

TEST(ParseDecimal, TrailingZerosFoldIntoPoint) {
  EXPECT_EQ(sci("1500"), make(false, "15", 2));
  EXPECT_EQ(sci("0.0100"), make(false, "1", -2));
  EXPECT_EQ(sci("120e-3"), make(false, "12", -2));
  EXPECT_EQ(sci("0e50"), make(false, "0", 0));
}

TEST(ParseDecimal, KeepsEveryMantissaDigit) {
  const std::string digits = "1234567890123456789012345678901234567890123";
  EXPECT_EQ(sci(digits + "e-10"), make(false, digits.c_str(), -10));
  EXPECT_EQ(sci("1." + digits.substr(1)), make(false, digits.c_str(), -42));
}

TEST(ParseDecimal, SignsAndOptionalParts) {
  EXPECT_EQ(sci("+7"), make(false, "7", 0));
  EXPECT_EQ(sci("-7e+2"), make(true, "7", 2));
  EXPECT_EQ(sci(".5"), make(false, "5", -1));
  EXPECT_EQ(sci("5."), make(false, "5", 0));
  EXPECT_EQ(sci("1e0000000000000000001"), make(false, "1", 1));
}

TEST(ParseDecimal, HugeExponentsSaturate) {
  const DecimalSci big = sci("1e99999999999999999999");
  EXPECT_GT(big.point, 400);
  const DecimalSci tiny = sci("1e-99999999999999999999");
  EXPECT_LT(tiny.point, -400);
}

TEST(ParseDecimal, SpecialTokens) {
  EXPECT_EQ(std::get<SpecialValue>(parse_decimal("NaN")), SpecialValue::kNaN);
  EXPECT_EQ(std::get<SpecialValue>(parse_decimal("Infinity")), SpecialValue::kPositiveInfinity);
  EXPECT_EQ(std::get<SpecialValue>(parse_decimal("+Infinity")), SpecialValue::kPositiveInfinity);
  EXPECT_EQ(std::get<SpecialValue>(parse_decimal("-Infinity")), SpecialValue::kNegativeInfinity);
}

TEST(ParseDecimal, RejectsMalformedInputWithPosition) {
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("1..2"), 2u);
  EXPECT_EQ(error_position("-"), 1u);
  EXPECT_EQ(error_position("."), 1u);
  EXPECT_EQ(error_position("1e"), 2u);
  EXPECT_EQ(error_position("1e+"), 3u);
  EXPECT_EQ(error_position("12x"), 2u);
  EXPECT_EQ(error_position(" 1"), 0u);
  EXPECT_EQ(error_position("nan"), 0u);
  EXPECT_EQ(error_position("Inf"), 0u);
  EXPECT_EQ(error_position("0x10"), 1u);
}

}  // namespace
}  // namespace ezfloat
