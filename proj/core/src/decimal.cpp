#include "ezfloat/decimal.hpp"

#include <string>

namespace ezfloat {

namespace {

constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Large enough that any representable mantissa length cannot pull the value
// back into range, small enough that point arithmetic cannot overflow.
constexpr std::int64_t kSaturatedExponent = 1'000'000'000'000'000LL;

}  // namespace

ParsedNumber parse_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty input", 0);

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }

  const std::string_view rest = text.substr(i);
  if (rest == "NaN") return SpecialValue::kNaN;
  if (rest == "Infinity")
    return negative ? SpecialValue::kNegativeInfinity : SpecialValue::kPositiveInfinity;

  // Mantissa: collect significant digits, tracking how many came after '.'.
  std::string digits;
  std::int64_t fraction_digits = 0;
  std::size_t mantissa_digit_count = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (is_digit(c)) {
      ++mantissa_digit_count;
      if (seen_point) ++fraction_digits;
      if (!digits.empty() || c != '0') digits.push_back(c);
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (mantissa_digit_count == 0) throw ParseError("expected a digit", i);

  std::int64_t exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exponent_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exponent_negative = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !is_digit(text[i]))
      throw ParseError("expected exponent digits", i);
    std::size_t significant = 0;
    for (; i < text.size() && is_digit(text[i]); ++i) {
      if (significant == 0 && text[i] == '0') continue;
      if (++significant <= kMaxExponentDigits) {
        exponent = exponent * 10 + (text[i] - '0');
      } else {
        exponent = kSaturatedExponent;
      }
    }
    if (exponent_negative) exponent = -exponent;
  }
  if (i != text.size()) throw ParseError("unexpected character", i);

  DecimalSci result;
  result.negative = negative;
  if (digits.empty()) return result;

  // Trailing zeros of the digit string fold into the exponent.
  std::size_t end = digits.size();
  while (digits[end - 1] == '0') --end;
  const auto trailing = static_cast<std::int64_t>(digits.size() - end);
  digits.resize(end);

  if (digits.size() <= 19) {
    std::uint64_t value = 0;
    for (const char c : digits) value = value * 10 + static_cast<std::uint64_t>(c - '0');
    mpz_set_ui(result.mant.get_mpz_t(), value);
  } else {
    result.mant.set_str(digits, 10);
  }
  result.point = exponent - fraction_digits + trailing;
  return result;
}

}  // namespace ezfloat
