#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/bench.hpp"
#include "cli/commands.hpp"
#include "cli/verify.hpp"

namespace cli = ezfloat::cli;

int main(int argc, char** argv) {
  CLI::App app{"Correctly rounded decimal <-> binary64 conversion"};
  app.require_subcommand(1);
  bool fast = false;
  app.add_flag("--fast", fast, "Writer uses 64-bit arithmetic when it fits");

  std::string read_text;
  bool read_stats = false;
  auto* read = app.add_subcommand("read", "Decimal text to bit pattern and shortest form");
  read->add_option("text", read_text, "Decimal literal, NaN or Infinity")->required();
  read->add_flag("--stats", read_stats, "Print division count and intermediate width");

  std::string write_input;
  auto* write = app.add_subcommand("write", "Bit pattern or decimal to shortest form");
  write->add_option("input", write_input, "0x + 16 hex digits, or a decimal literal")
      ->required();

  std::uint64_t rt_count = 1000;
  std::uint64_t rt_seed = 1;
  auto* roundtrip = app.add_subcommand("roundtrip", "Random bit patterns through write and read");
  roundtrip->add_option("--count", rt_count, "Number of non-NaN patterns");
  roundtrip->add_option("--seed", rt_seed, "mt19937_64 seed");

  std::string suite_name;
  cli::VerifyConfig verify_config;
  auto* verify = app.add_subcommand("verify", "Run oracle audits and bound checks");
  verify->add_option("suite", suite_name, "oracle | minimality | allones | bounds | all")
      ->required()
      ->check(CLI::IsMember({"oracle", "minimality", "allones", "bounds", "all"}));
  verify->add_option("--count", verify_config.oracle_count, "Random decimals for oracle");
  verify->add_option("--minimality-count", verify_config.minimality_count,
                     "Random doubles for minimality and bounds");
  verify->add_option("--seed", verify_config.seed, "mt19937_64 seed");
  verify->add_option("--threads", verify_config.threads, "Audit threads (0: hardware)");

  cli::BenchConfig bench_config;
  bool no_native = false;
  auto* bench = app.add_subcommand("bench", "Timed write/read experiment over 10^X * 10^n");
  bench->add_option("--values", bench_config.value_count, "Values per row")
      ->check(CLI::PositiveNumber);
  bench->add_option("--exp-low", bench_config.exp_low, "First n");
  bench->add_option("--exp-high", bench_config.exp_high, "Last n");
  bench->add_option("--seed", bench_config.seed, "mt19937_64 seed");
  bench->add_option("--csv", bench_config.csv_path, "Output file (default stdout)");
  bench->add_flag("--scale-float", bench_config.scale_float,
                  "Scale by floating multiplication instead of exactly");
  bench->add_flag("--no-native", no_native, "Skip std::to_chars/from_chars rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsageError;
  }

  ezfloat::WriterOptions options = cli::options_from_environment();
  options.word_fast_path = fast;

  if (*read) return cli::cmd_read(read_text, read_stats, options, std::cout, std::cerr);
  if (*write) return cli::cmd_write(write_input, options, std::cout, std::cerr);
  if (*roundtrip) return cli::cmd_roundtrip(rt_count, rt_seed, options, std::cout);
  if (*verify) {
    return cli::cmd_verify(*cli::parse_suite(suite_name), verify_config, std::cout);
  }
  bench_config.native = !no_native;
  bench_config.fast = fast;
  return cli::cmd_bench(bench_config, std::cout, std::cerr);
}
