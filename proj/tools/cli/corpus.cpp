#include "cli/corpus.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ezfloat::cli {

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(Rng& rng) {
  double u1 = uniform01(rng);
  while (u1 == 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> random_finite_doubles(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(count);
  while (out.size() < count) {
    const double f = std::bit_cast<double>(rng());
    if (std::isfinite(f)) out.push_back(f);
  }
  return out;
}

std::vector<double> curated_doubles() {
  const auto from = [](std::uint64_t bits) { return std::bit_cast<double>(bits); };
  std::vector<double> out = {
      0.0,
      -0.0,
      from(0x0000000000000001),  // least subnormal
      from(0x000FFFFFFFFFFFFF),  // greatest subnormal
      from(0x0010000000000000),  // least normal
      from(0x7FEFFFFFFFFFFFFF),  // greatest finite
      1.0,
      0.1,
      0.3,
  };
  for (int e = -1074; e <= 1023; ++e) {
    const double p = std::ldexp(1.0, e);
    out.push_back(p);
    out.push_back(std::nextafter(p, 0.0));
    out.push_back(std::nextafter(p, std::numeric_limits<double>::infinity()));
  }
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
  return out;
}

std::vector<DecimalSci> random_decimals(std::size_t count, std::uint64_t seed,
                                        int max_digits, int point_low, int point_high) {
  Rng rng(seed);
  std::uniform_int_distribution<int> length(1, max_digits);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> lead(1, 9);
  std::uniform_int_distribution<int> point(point_low, point_high);
  std::vector<DecimalSci> out;
  out.reserve(count);
  std::string digits;
  for (std::size_t i = 0; i < count; ++i) {
    const int len = length(rng);
    digits.assign(1, static_cast<char>('0' + lead(rng)));
    for (int k = 1; k < len; ++k) digits.push_back(static_cast<char>('0' + digit(rng)));
    DecimalSci d;
    d.mant.set_str(digits, 10);
    d.point = point(rng);
    d.negative = (rng() & 1U) != 0;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<DecimalSci> bounds_grid() {
  Rng rng(0x5eed);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> lead(1, 9);
  std::vector<DecimalSci> out;
  for (int len = 1; len <= 17; ++len) {
    std::vector<std::string> patterns;
    patterns.emplace_back(static_cast<std::size_t>(len), '9');
    patterns.push_back("1" + std::string(static_cast<std::size_t>(len - 1), '0'));
    if (len >= 2)
      patterns.push_back("1" + std::string(static_cast<std::size_t>(len - 2), '0') + "1");
    patterns.push_back(std::string("12345678901234567").substr(0, static_cast<std::size_t>(len)));
    for (int r = 0; r < 3; ++r) {
      std::string s(1, static_cast<char>('0' + lead(rng)));
      for (int k = 1; k < len; ++k) s.push_back(static_cast<char>('0' + digit(rng)));
      patterns.push_back(s);
    }
    // value = mant * 10^point lies in [1e-325, 1e309) for these points.
    const int low = -325 - (len - 1);
    const int high = 308 - (len - 1);
    for (const auto& pattern : patterns) {
      for (int point = low; point <= high; ++point) {
        DecimalSci d;
        d.mant.set_str(pattern, 10);
        d.point = point;
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

}  // namespace ezfloat::cli
