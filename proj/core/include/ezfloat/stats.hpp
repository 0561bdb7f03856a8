#pragma once

#include <algorithm>
#include <cstddef>

namespace ezfloat {

/// Per-call instrumentation for a single read or write conversion.
///
/// `divisions` counts rounding quotients, `max_intermediate_bits` is the
/// widest big integer built or consumed by the conversion, and
/// `max_quotient_excess` is the largest observed `bits(q) - (bits(num) -
/// bits(den))` over all quotients with `bits(num) >= bits(den)`. An excess
/// of 2 would mean a rounded quotient needed two extra bits.
struct ConversionStats {
  int divisions = 0;
  int retries = 0;    // reader: quotient came out one bit too long
  int fallbacks = 0;  // writer: first digit string failed to read back
  std::size_t max_intermediate_bits = 0;
  int max_quotient_excess = 0;

  void observe_bits(std::size_t bits) {
    max_intermediate_bits = std::max(max_intermediate_bits, bits);
  }

  void merge(const ConversionStats& other) {
    divisions += other.divisions;
    retries += other.retries;
    fallbacks += other.fallbacks;
    max_intermediate_bits =
        std::max(max_intermediate_bits, other.max_intermediate_bits);
    max_quotient_excess = std::max(max_quotient_excess, other.max_quotient_excess);
  }
};

}  // namespace ezfloat
