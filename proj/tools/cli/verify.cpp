#include "cli/verify.hpp"

#include <bit>
#include <cmath>
#include <ostream>

#include "cli/commands.hpp"
#include "cli/corpus.hpp"
#include "ezfloat/oracle.hpp"
#include "ezfloat/reader.hpp"
#include "ezfloat/writer.hpp"

namespace ezfloat::cli {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "oracle") return Suite::kOracle;
  if (name == "minimality") return Suite::kMinimality;
  if (name == "allones") return Suite::kAllOnes;
  if (name == "bounds") return Suite::kBounds;
  if (name == "all") return Suite::kAll;
  return std::nullopt;
}

namespace {

std::uint64_t bits_of(double f) { return std::bit_cast<std::uint64_t>(f); }

std::string describe(const DecimalSci& d) {
  return std::string(d.negative ? "-" : "") + d.mant.get_str() + "e" + std::to_string(d.point);
}

}  // namespace

OracleResult check_oracle(const std::vector<DecimalSci>& inputs) {
  OracleResult result;
  for (const auto& d : inputs) {
    ++result.cases;
    const double exact = oracle::nearest_double_exact(d);
    const double sign = d.negative ? -1.0 : 1.0;
    const double via5 = std::copysign(decimal_to_double_pow5(d.mant, d.point), sign);
    const double via10 = std::copysign(decimal_to_double_pow10(d.mant, d.point), sign);
    if (bits_of(via5) != bits_of(exact) || bits_of(via10) != bits_of(exact)) {
      result.mismatches.push_back(describe(d) + " oracle=" + hex_bits(exact) +
                                  " pow5=" + hex_bits(via5) + " pow10=" + hex_bits(via10));
    }
  }
  return result;
}

MinimalityResult check_minimality(const std::vector<double>& values) {
  MinimalityResult result;
  for (const double f : values) {
    if (f == 0.0 || !std::isfinite(f)) continue;
    ++result.cases;
    const ShortestDigits sd = shortest_digits(f);
    if (!oracle::minimality_check(f, oracle::significant_digits(sd.digits)))
      result.failures.push_back(f);
  }
  return result;
}

ReadBounds measure_reads(const std::vector<DecimalSci>& inputs) {
  ReadBounds bounds;
  for (const auto& d : inputs) {
    ConversionStats s5;
    decimal_to_double_pow5(d.mant, d.point, &s5);
    if (s5.max_intermediate_bits > bounds.max_pow5_bits) {
      bounds.max_pow5_bits = s5.max_intermediate_bits;
      bounds.widest_pow5 = d;
    }
    ConversionStats s10;
    decimal_to_double_pow10(d.mant, d.point, &s10);
    if (s10.max_intermediate_bits > bounds.max_pow10_bits) {
      bounds.max_pow10_bits = s10.max_intermediate_bits;
      bounds.widest_pow10 = d;
    }
    bounds.max_divisions = std::max({bounds.max_divisions, s5.divisions, s10.divisions});
  }
  return bounds;
}

WriteBounds measure_writes(const std::vector<double>& values) {
  WriteBounds bounds;
  for (const double f : values) {
    if (f == 0.0 || !std::isfinite(f)) continue;
    ConversionStats write5;
    const ShortestDigits sd = shortest_digits(f, WriterOptions{}, &write5);
    ConversionStats write10;
    shortest_digits_pow10(f, &write10);
    ConversionStats read;
    decimal_to_double_pow5(BigInt(static_cast<unsigned long>(sd.digits)), sd.point, &read);
    bounds.max_pow5_bits = std::max(bounds.max_pow5_bits, write5.max_intermediate_bits);
    bounds.max_pow10_bits = std::max(bounds.max_pow10_bits, write10.max_intermediate_bits);
    bounds.max_divisions = std::max(bounds.max_divisions, write5.divisions);
    bounds.max_read_divisions = std::max(bounds.max_read_divisions, read.divisions);
  }
  return bounds;
}

namespace {

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

bool run_oracle(const VerifyConfig& config, std::ostream& out) {
  const auto result = check_oracle(random_decimals(config.oracle_count, config.seed));
  for (const auto& m : result.mismatches) out << "MISMATCH " << m << '\n';
  out << "oracle: cases " << result.cases << " mismatches " << result.mismatches.size() << '\n';
  return result.mismatches.empty();
}

bool run_minimality(const VerifyConfig& config, std::ostream& out) {
  std::vector<double> values = random_finite_doubles(config.minimality_count, config.seed);
  for (const double f : {0x0.0000000000001p-1022, 0.1, 0.3, 0x1.fffffffffffffp+1023})
    values.push_back(f);
  const auto result = check_minimality(values);
  for (const double f : result.failures)
    out << "NOT-MINIMAL " << hex_bits(f) << ' ' << double_to_string(f) << '\n';
  out << "minimality: cases " << result.cases << " failures " << result.failures.size() << '\n';
  return result.failures.empty();
}

bool run_allones(const VerifyConfig& config, std::ostream& out) {
  const auto audit = oracle::audit_quotient_lengths(config.threads);
  oracle::write_report(out, audit);
  out << "violations: " << audit.violations.size() << '\n';
  return audit.violations.empty() && audit.max_retries_per_conversion <= 1;
}

bool run_bounds(const VerifyConfig& config, std::ostream& out) {
  const ReadBounds reads = measure_reads(bounds_grid());
  std::vector<double> corpus = curated_doubles();
  const auto random = random_finite_doubles(config.minimality_count, config.seed);
  corpus.insert(corpus.end(), random.begin(), random.end());
  const WriteBounds writes = measure_writes(corpus);

  const bool pow5_ok = reads.max_pow5_bits <= kPow5BitBound;
  const bool pow10_ok = reads.max_pow10_bits <= kPow10BitBound;
  const bool reads_ok = reads.max_divisions <= kMaxReadDivisions &&
                        writes.max_read_divisions <= kMaxReadDivisions;
  const bool writes_ok = writes.max_divisions <= kMaxWriteDivisions;

  out << "max pow5 bits: " << reads.max_pow5_bits << ", max pow10 bits: "
      << reads.max_pow10_bits << '\n';
  out << "read pow5 bits <= " << kPow5BitBound << ": " << verdict(pow5_ok) << " (widest "
      << describe(reads.widest_pow5) << ")\n";
  out << "read pow10 bits <= " << kPow10BitBound << ": " << verdict(pow10_ok) << " (widest "
      << describe(reads.widest_pow10) << ")\n";
  out << "writer max pow5 bits: " << writes.max_pow5_bits
      << ", writer max pow10 bits: " << writes.max_pow10_bits << '\n';
  out << "max read divisions: " << std::max(reads.max_divisions, writes.max_read_divisions)
      << " (bound " << kMaxReadDivisions << "): " << verdict(reads_ok) << '\n';
  out << "max write divisions: " << writes.max_divisions << " (bound " << kMaxWriteDivisions
      << "): " << verdict(writes_ok) << '\n';
  return pow5_ok && pow10_ok && reads_ok && writes_ok;
}

}  // namespace

int cmd_verify(Suite suite, const VerifyConfig& config, std::ostream& out) {
  bool ok = true;
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kOracle) ok = run_oracle(config, out) && ok;
  if (all || suite == Suite::kMinimality) ok = run_minimality(config, out) && ok;
  if (all || suite == Suite::kAllOnes) ok = run_allones(config, out) && ok;
  if (all || suite == Suite::kBounds) ok = run_bounds(config, out) && ok;
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace ezfloat::cli
