#include "ezfloat/bigmath.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace ezfloat {

std::size_t bit_length(const BigInt& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t decimal_digits(const BigInt& x) {
  if (sgn(x) == 0) return 1;
  // mpz_sizeinbase may overshoot by one for non-power-of-two bases.
  std::size_t digits = mpz_sizeinbase(x.get_mpz_t(), 10);
  if (digits > 1 && cmp(abs(x), power_of10(static_cast<std::int64_t>(digits) - 1)) < 0)
    --digits;
  return digits;
}

PowerTables::PowerTables() {
  pow5_[0] = 1;
  pow10_[0] = 1;
  for (std::size_t k = 1; k < pow5_.size(); ++k) {
    pow5_[k] = pow5_[k - 1] * 5;
    pow10_[k] = pow10_[k - 1] * 10;
  }
}

const PowerTables& PowerTables::instance() {
  static const PowerTables tables;
  return tables;
}

namespace {

// Forces construction before main() so that worker threads never race on
// first use.
[[maybe_unused]] const PowerTables& eager_tables = PowerTables::instance();

template <typename Lookup>
const BigInt& chained_power(std::int64_t k, BigInt& storage, Lookup lookup) {
  assert(k >= 0);
  if (k <= kMaxTablePower) return lookup(static_cast<int>(k));
  storage = lookup(kMaxTablePower);
  k -= kMaxTablePower;
  while (k > kMaxTablePower) {
    storage *= lookup(kMaxTablePower);
    k -= kMaxTablePower;
  }
  storage *= lookup(static_cast<int>(k));
  return storage;
}

}  // namespace

const BigInt& power_of5(std::int64_t k, BigInt& storage) {
  const auto& tables = PowerTables::instance();
  return chained_power(k, storage, [&](int i) -> const BigInt& { return tables.pow5(i); });
}

const BigInt& power_of10(std::int64_t k, BigInt& storage) {
  const auto& tables = PowerTables::instance();
  return chained_power(k, storage, [&](int i) -> const BigInt& { return tables.pow10(i); });
}

BigInt power_of5(std::int64_t k) {
  BigInt storage;
  return power_of5(k, storage);
}

BigInt power_of10(std::int64_t k) {
  BigInt storage;
  return power_of10(k, storage);
}

namespace {

struct Scratch {
  BigInt quotient;
  BigInt remainder;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// Leaves the rounded quotient in s.quotient.
void round_quotient_into(const BigInt& num, const BigInt& den, Scratch& s) {
  if (sgn(den) == 0) throw std::domain_error("round_quotient: zero denominator");
  assert(sgn(num) >= 0 && sgn(den) > 0);

  const mpz_srcptr n = num.get_mpz_t();
  const mpz_srcptr d = den.get_mpz_t();
  const mp_bitcnt_t low = mpz_scan1(d, 0);
  int cmp;
  if (mpz_sizeinbase(d, 2) == low + 1) {
    // Power-of-two divisor: shift, then inspect the bits shifted out.
    mpz_tdiv_q_2exp(s.quotient.get_mpz_t(), n, low);
    if (low == 0) {
      cmp = -1;
    } else if (mpz_tstbit(n, low - 1) == 0) {
      cmp = -1;
    } else {
      const mp_bitcnt_t below = mpz_scan1(n, 0);
      cmp = below < low - 1 ? 1 : 0;
    }
  } else {
    mpz_tdiv_qr(s.quotient.get_mpz_t(), s.remainder.get_mpz_t(), n, d);
    mpz_mul_2exp(s.remainder.get_mpz_t(), s.remainder.get_mpz_t(), 1);
    cmp = mpz_cmp(s.remainder.get_mpz_t(), d);
  }
  if (detail::round_up(mpz_odd_p(s.quotient.get_mpz_t()) != 0, cmp))
    mpz_add_ui(s.quotient.get_mpz_t(), s.quotient.get_mpz_t(), 1);
}

}  // namespace

std::int64_t round_quotient(const BigInt& num, const BigInt& den) {
  Scratch& s = scratch();
  round_quotient_into(num, den, s);
  assert(mpz_sizeinbase(s.quotient.get_mpz_t(), 2) <= 63);
  return static_cast<std::int64_t>(mpz_get_ui(s.quotient.get_mpz_t()));
}

BigInt round_quotient_big(const BigInt& num, const BigInt& den) {
  Scratch s;
  round_quotient_into(num, den, s);
  return s.quotient;
}

std::int64_t round_quotient(const BigInt& num, const BigInt& den,
                            ConversionStats* stats) {
  const std::int64_t q = round_quotient(num, den);
  if (stats != nullptr) {
    const std::size_t n = bit_length(num);
    const std::size_t m = bit_length(den);
    ++stats->divisions;
    stats->observe_bits(n);
    stats->observe_bits(m);
    if (n >= m) {
      const int qbits = width(static_cast<std::uint64_t>(q));
      const int excess = qbits - static_cast<int>(n - m);
      stats->max_quotient_excess = std::max(stats->max_quotient_excess, excess);
    }
  }
  return q;
}

std::uint64_t round_quotient(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("round_quotient: zero denominator");
  const std::uint64_t q = num / den;
  const std::uint64_t r = num % den;
  const std::uint64_t rest = den - r;
  const int cmp = r > rest ? 1 : (r == rest ? 0 : -1);
  return detail::round_up((q & 1U) != 0, cmp) ? q + 1 : q;
}

}  // namespace ezfloat
