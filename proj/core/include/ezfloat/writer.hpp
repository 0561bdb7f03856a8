#pragma once

#include <cstdint>
#include <string>

#include "ezfloat/stats.hpp"

namespace ezfloat {

enum class DoubleKind { kZero, kSubnormal, kNormal, kInfinite, kNaN };

/// |value| = mantissa * 2^exponent for finite values.
///
/// Normals carry the implicit bit (2^52 <= mantissa < 2^53, exponent =
/// biased - 1075); subnormals and zeros use exponent -1074.
struct UnpackedDouble {
  bool negative = false;
  std::uint64_t mantissa = 0;
  int exponent = 0;
  DoubleKind kind = DoubleKind::kZero;
};

UnpackedDouble unpack_double(double f);

/// Inverse of unpack_double for finite values.
double repack_double(const UnpackedDouble& u);

/// The unique p with 10^(p-1) < 2^e2 <= 10^p, computed as ceil(e2 * log10(2)).
/// Exact for -1100 <= e2 <= 1100.
int estimate_decimal_exponent(int e2);

/// Decimal digits of a double: value = digits * 10^point.
struct ShortestDigits {
  std::uint64_t digits = 0;
  int point = 0;

  friend bool operator==(const ShortestDigits&, const ShortestDigits&) = default;
};

struct WriterOptions {
  /// Print -0.0 as "0.0", like the original listing.
  bool unsigned_zero = false;
  /// Print a lone mantissa digit as "5.E-324" instead of "5.0E-324".
  bool unpadded_single_digit = false;
  /// Go straight to the extra-digit quotient. Faster, but some outputs carry
  /// one digit more than necessary.
  bool skip_first_attempt = false;
  /// Use 64-bit arithmetic when every intermediate fits.
  bool word_fast_path = false;
  /// Re-read the fallback digits and throw std::logic_error if they do not
  /// reproduce the input. Not counted in ConversionStats.
#ifdef NDEBUG
  bool verify_fallback = false;
#else
  bool verify_fallback = true;
#endif

  /// Options that reproduce the original listing's output byte for byte.
  static WriterOptions listing_compatible() {
    WriterOptions options;
    options.unsigned_zero = true;
    options.unpadded_single_digit = true;
    return options;
  }
};

/// Shortest digit string for finite nonzero |f| that reads back to |f|.
///
/// First tries the quotient at the decimal exponent just above the binary
/// ulp, then, if that does not read back, one more digit. At most four
/// rounded quotients are computed, counting the reader's.
ShortestDigits shortest_digits(double f, const WriterOptions& options = {},
                               ConversionStats* stats = nullptr);

/// Same digits computed with the powers-of-ten writer. Reference variant for
/// instrumentation; the output is identical to shortest_digits.
ShortestDigits shortest_digits_pow10(double f, ConversionStats* stats = nullptr);

/// Renders `[-]d.ddddE[-]x`, trimming trailing zeros of `digits`.
std::string format_sci(bool negative, std::uint64_t digits, int point,
                       const WriterOptions& options = {});

/// "NaN", "Infinity", "-Infinity", "0.0", "-0.0", or format_sci of the
/// shortest digits.
std::string double_to_string(double f, const WriterOptions& options = {},
                             ConversionStats* stats = nullptr);

/// double_to_string with the 64-bit fast path enabled.
std::string double_to_string_fast(double f, const WriterOptions& options = {});

}  // namespace ezfloat
