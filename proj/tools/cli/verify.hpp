#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ezfloat/decimal.hpp"

namespace ezfloat::cli {

inline constexpr std::size_t kPow5BitBound = 803;
inline constexpr std::size_t kPow10BitBound = 1126;
inline constexpr int kMaxReadDivisions = 2;
inline constexpr int kMaxWriteDivisions = 4;

enum class Suite { kOracle, kMinimality, kAllOnes, kBounds, kAll };

std::optional<Suite> parse_suite(std::string_view name);

struct VerifyConfig {
  std::size_t oracle_count = 100'000;
  std::size_t minimality_count = 10'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct OracleResult {
  std::size_t cases = 0;
  std::vector<std::string> mismatches;  // one description per failing input
};

/// Both reader variants against the exact oracle, bit for bit.
OracleResult check_oracle(const std::vector<DecimalSci>& inputs);

struct MinimalityResult {
  std::size_t cases = 0;
  std::vector<double> failures;
};

/// minimality_check over the writer's output for each nonzero finite value.
MinimalityResult check_minimality(const std::vector<double>& values);

struct ReadBounds {
  std::size_t max_pow5_bits = 0;
  std::size_t max_pow10_bits = 0;
  int max_divisions = 0;
  DecimalSci widest_pow5;
  DecimalSci widest_pow10;
};

/// Intermediate widths and division counts of both reader variants.
ReadBounds measure_reads(const std::vector<DecimalSci>& inputs);

struct WriteBounds {
  std::size_t max_pow5_bits = 0;
  std::size_t max_pow10_bits = 0;
  int max_divisions = 0;
  int max_read_divisions = 0;  // reading the written digits back
};

/// Division counts of the writer (including its read-back check) and of the
/// follow-up read, plus intermediate widths of both writer variants.
WriteBounds measure_writes(const std::vector<double>& values);

int cmd_verify(Suite suite, const VerifyConfig& config, std::ostream& out);

}  // namespace ezfloat::cli
