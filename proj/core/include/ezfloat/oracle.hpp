#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ezfloat/bigmath.hpp"
#include "ezfloat/decimal.hpp"
#include "ezfloat/writer.hpp"

// Slow, exact reference implementations. Nothing here reuses the reader's
// scaling or retry logic; the only shared primitive is round_quotient_big.
namespace ezfloat::oracle {

/// (-1)^negative * num / den, unreduced.
struct ExactRational {
  BigInt num = 0;
  BigInt den = 1;
  bool negative = false;
};

ExactRational to_rational(const DecimalSci& d);
ExactRational to_rational(double f);  // finite f only

/// Correctly rounded binary64 nearest to an exact rational, ties to even.
double nearest_double(const ExactRational& r);

/// Correctly rounded binary64 nearest to the decimal value.
double nearest_double_exact(const DecimalSci& d);

/// True iff no decimal with fewer than `produced_digits` significant digits
/// reads back to f. Both the floor and ceiling neighbours are tried at each
/// shorter length.
bool minimality_check(double f, int produced_digits);

/// Shortest digits found by search: the fewest significant digits that read
/// back to |f|, choosing the candidate nearest |f| (ties to even).
ShortestDigits shortest_by_search(double f);

/// Significant digit count of a ShortestDigits value (trailing zeros dropped).
int significant_digits(std::uint64_t digits);

/// Every positive finite double whose integer significand is 2^k - 1,
/// ascending: 52 subnormals plus one per normal binade.
std::vector<double> all_ones_mantissa_values();

struct QuotientViolation {
  double value = 0.0;
  std::string stage;  // "write", "write10", "read5", "read10", "exact5" or "exact10"
  int quotient_excess = 0;
  int retries = 0;
};

struct QuotientAudit {
  std::size_t values_tested = 0;
  int max_retries_per_conversion = 0;
  int max_quotient_excess = 0;         // reader quotients only
  int max_writer_quotient_excess = 0;  // informational
  std::vector<QuotientViolation> violations;
};

/// Reads every all-ones value with both reader variants, from its exact
/// decimal expansion and from the writer's shortest digits, checking that no
/// reader quotient exceeds n - m + 1 bits and that one retry always suffices.
/// The writer stages must agree with each other and read back; their short
/// digit quotients may round up past n - m + 1 bits (3.6 -> 4), which is
/// recorded but not a violation. Work is split across `threads`
/// (0 = hardware concurrency).
QuotientAudit audit_quotient_lengths(unsigned threads = 0);

/// One line per violation, then a `values: N violations: V ...` trailer.
void write_report(std::ostream& out, const QuotientAudit& audit);

}  // namespace ezfloat::oracle
