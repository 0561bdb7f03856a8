#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ezfloat::cli {

struct BenchConfig {
  std::size_t value_count = 100'000;
  int exp_low = -322;
  int exp_high = 307;
  std::uint64_t seed = 1;
  std::string csv_path;       // empty: CSV goes to the output stream
  bool scale_float = false;   // scale by multiplying doubles instead of shifting the point
  bool native = true;         // add rows for std::to_chars / std::from_chars
  bool fast = false;          // writer uses the 64-bit fast path
};

struct BenchRow {
  int n = 0;
  std::string engine;
  std::uint64_t write_ns = 0;
  std::uint64_t read_ns = 0;
  std::size_t values = 0;
  bool verified = false;
};

inline constexpr const char* kBenchHeader = "n,engine,write_ns,read_ns,values,verified";

/// 10^X for standard normal X, seeded.
std::vector<double> lognormal_values(std::size_t count, std::uint64_t seed);

/// The base vector scaled by 10^n, one rounding per value.
std::vector<double> scaled_reference(const std::vector<double>& base, int n, bool scale_float);

/// Runs the experiment. Rows go to `csv` as they complete; a round-trip
/// mismatch is reported on `err` and stops the run with exit code 1.
int cmd_bench(const BenchConfig& config, std::ostream& csv, std::ostream& err,
              std::vector<BenchRow>* rows = nullptr);

std::string format_row(const BenchRow& row);

}  // namespace ezfloat::cli
