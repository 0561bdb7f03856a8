#include "support/reference.hpp"

#include <mpfr.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ezfloat::testing {

std::uint64_t bits(double f) { return std::bit_cast<std::uint64_t>(f); }
double from_bits(std::uint64_t b) { return std::bit_cast<double>(b); }

double mpfr_nearest(const std::string& text) {
  // binary64: 53-bit precision, values in [2^-1074, 2^1024).
  const mpfr_exp_t old_min = mpfr_get_emin();
  const mpfr_exp_t old_max = mpfr_get_emax();
  mpfr_set_emin(-1073);
  mpfr_set_emax(1024);
  mpfr_t x;
  mpfr_init2(x, 53);
  const int t = mpfr_strtofr(x, text.c_str(), nullptr, 10, MPFR_RNDN);
  mpfr_subnormalize(x, t, MPFR_RNDN);
  const double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  mpfr_set_emin(old_min);
  mpfr_set_emax(old_max);
  return out;
}

double long_division_nearest(const BigInt& mant, std::int64_t point) {
  if (mant == 0) return 0.0;
  BigInt num = mant;
  BigInt den = 1;
  for (std::int64_t i = 0; i < point; ++i) num *= 10;
  for (std::int64_t i = 0; i > point; --i) den *= 10;

  // Find e with 2^e <= num/den < 2^(e+1) by repeated doubling and halving.
  int e = 0;
  BigInt scaled_den = den;
  BigInt scaled_num = num;
  while (scaled_num >= scaled_den * 2) {
    scaled_den *= 2;
    ++e;
    if (e > 1100) return std::numeric_limits<double>::infinity();
  }
  while (scaled_num < scaled_den) {
    scaled_num *= 2;
    --e;
    if (e < -1200) return 0.0;
  }
  // Now 1 <= scaled_num/scaled_den < 2. Bits kept: 53, fewer below 2^-1022.
  const int keep = e >= -1022 ? 53 : 53 - (-1022 - e);
  if (keep < 0) return 0.0;

  std::uint64_t q = 0;
  BigInt rem = scaled_num;
  for (int i = 0; i < keep; ++i) {
    q <<= 1;
    if (rem >= scaled_den) {
      q |= 1;
      rem -= scaled_den;
    }
    rem *= 2;
  }
  // rem/scaled_den is now twice the discarded fraction when keep > 0.
  const int c = cmp(rem, scaled_den);
  if (c > 0 || (c == 0 && (q & 1) != 0)) ++q;

  const int lsb_exp = e - keep + 1;
  return std::ldexp(static_cast<double>(q), lsb_exp);
}

CharsDigits to_chars_digits(double f) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, std::fabs(f), std::chars_format::scientific);
  if (res.ec != std::errc{}) throw std::runtime_error("to_chars failed");
  const std::string s(buf, res.ptr);
  const auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  int exp10 = std::stoi(s.substr(epos + 1));
  const auto dot = mant.find('.');
  int frac = 0;
  if (dot != std::string::npos) {
    frac = static_cast<int>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  CharsDigits out;
  out.digits = std::stoull(mant);
  out.point = exp10 - frac;
  while (out.digits != 0 && out.digits % 10 == 0) {
    out.digits /= 10;
    ++out.point;
  }
  return out;
}

}  // namespace ezfloat::testing
