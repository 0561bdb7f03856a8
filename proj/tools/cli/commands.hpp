#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ezfloat/writer.hpp"

namespace ezfloat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/// Writer options from EZFLOAT_COMPAT: any value other than empty or "0"
/// selects the listing-compatible output ("0.0" for -0.0, "5.E-324").
WriterOptions options_from_environment();

/// "0x" followed by the 16 uppercase hex digits of the bit pattern.
std::string hex_bits(double f);

/// Parses "0x" + exactly 16 hex digits. Empty on any other input.
std::optional<double> parse_hex_bits(std::string_view text);

/// `read <text>`: prints "<hex> <shortest>", plus a stats line when asked.
int cmd_read(std::string_view text, bool show_stats, const WriterOptions& options,
             std::ostream& out, std::ostream& err);

/// `write <0x-bits | decimal>`: prints the shortest string.
int cmd_write(std::string_view input, const WriterOptions& options, std::ostream& out,
              std::ostream& err);

/// `roundtrip`: random bit patterns (NaNs skipped) through write then read.
/// Failures print as `FAIL 0x<hex> wrote <s> read 0x<hex>`.
int cmd_roundtrip(std::uint64_t count, std::uint64_t seed, const WriterOptions& options,
                  std::ostream& out);

}  // namespace ezfloat::cli
