#include "cli/commands.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "cli/corpus.hpp"
#include "ezfloat/reader.hpp"

namespace ezfloat::cli {

WriterOptions options_from_environment() {
  const char* compat = std::getenv("EZFLOAT_COMPAT");
  if (compat != nullptr && *compat != '\0' && std::string_view(compat) != "0")
    return WriterOptions::listing_compatible();
  return WriterOptions{};
}

std::string hex_bits(double f) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llX",
                static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(f)));
  return buf;
}

std::optional<double> parse_hex_bits(std::string_view text) {
  if (text.size() != 18 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
    return std::nullopt;
  std::uint64_t bits = 0;
  const char* first = text.data() + 2;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, bits, 16);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return std::bit_cast<double>(bits);
}

int cmd_read(std::string_view text, bool show_stats, const WriterOptions& options,
             std::ostream& out, std::ostream& err) {
  ReadOutcome outcome;
  try {
    outcome = read_double_with_stats(text);
  } catch (const ParseError& e) {
    err << "error: cannot read '" << text << "': " << e.what() << '\n';
    return kUsageError;
  }
  out << hex_bits(outcome.value) << ' ' << double_to_string(outcome.value, options) << '\n';
  if (show_stats) {
    out << "divisions: " << outcome.stats.divisions << " retries: " << outcome.stats.retries
        << " max_bits: " << outcome.stats.max_intermediate_bits << '\n';
  }
  return kSuccess;
}

int cmd_write(std::string_view input, const WriterOptions& options, std::ostream& out,
              std::ostream& err) {
  double value = 0.0;
  if (input.size() >= 2 && input[0] == '0' && (input[1] == 'x' || input[1] == 'X')) {
    const auto parsed = parse_hex_bits(input);
    if (!parsed) {
      err << "error: '" << input << "' is not 0x followed by 16 hex digits\n";
      return kUsageError;
    }
    value = *parsed;
  } else {
    try {
      value = read_double(input);
    } catch (const ParseError& e) {
      err << "error: cannot read '" << input << "': " << e.what() << '\n';
      return kUsageError;
    }
  }
  out << double_to_string(value, options) << '\n';
  return kSuccess;
}

int cmd_roundtrip(std::uint64_t count, std::uint64_t seed, const WriterOptions& options,
                  std::ostream& out) {
  Rng rng(seed);
  std::uint64_t tested = 0;
  std::uint64_t failures = 0;
  while (tested < count) {
    const std::uint64_t bits = rng();
    const double f = std::bit_cast<double>(bits);
    if (std::isnan(f)) continue;
    ++tested;
    const std::string text = double_to_string(f, options);
    const double back = read_double(text);
    // The listing-compatible writer prints -0.0 as "0.0" by design.
    const bool zero_compat = options.unsigned_zero && f == 0.0 && back == 0.0;
    if (std::bit_cast<std::uint64_t>(back) != bits && !zero_compat) {
      ++failures;
      out << "FAIL " << hex_bits(f) << " wrote " << text << " read " << hex_bits(back) << '\n';
    }
  }
  out << "cases: " << tested << " failures: " << failures << '\n';
  return failures == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace ezfloat::cli
