#include "cli/bench.hpp"

#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string_view>

#include "cli/commands.hpp"
#include "cli/corpus.hpp"
#include "ezfloat/reader.hpp"
#include "ezfloat/writer.hpp"

namespace ezfloat::cli {

std::vector<double> lognormal_values(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::pow(10.0, standard_normal(rng)));
  return out;
}

namespace {

struct BaseDigits {
  std::uint64_t digits;
  int point;
};

double scale_exact(const BaseDigits& b, int n) {
  const std::int64_t point = std::int64_t{b.point} + n;
  double out = 0.0;
  if (decimal_to_double_word(b.digits, point, out)) return out;
  return decimal_to_double_pow5(BigInt(static_cast<unsigned long>(b.digits)), point);
}

std::vector<BaseDigits> base_digits(const std::vector<double>& base) {
  std::vector<BaseDigits> out;
  out.reserve(base.size());
  for (const double f : base) {
    const ShortestDigits sd = shortest_digits(f);
    out.push_back({sd.digits, sd.point});
  }
  return out;
}

std::vector<double> scaled_from_digits(const std::vector<BaseDigits>& digits, int n) {
  std::vector<double> out;
  out.reserve(digits.size());
  for (const auto& b : digits) out.push_back(scale_exact(b, n));
  return out;
}

std::vector<double> scaled_by_float(const std::vector<double>& base, int n) {
  const double factor = std::pow(10.0, n);
  std::vector<double> out;
  out.reserve(base.size());
  for (const double f : base) out.push_back(f * factor);
  return out;
}

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

// Every engine writes into one buffer with '\n' separators, then reads the
// lines back into `back`.
struct Buffers {
  std::string text;
  std::vector<std::size_t> ends;
  std::vector<double> back;
};

struct Mismatch {
  std::size_t index;
};

template <class Write, class Read>
std::optional<Mismatch> run_engine(const std::vector<double>& reference, Buffers& buf,
                                   BenchRow& row, Write&& write, Read&& read) {
  buf.text.clear();
  buf.ends.clear();
  buf.back.assign(reference.size(), 0.0);

  auto start = Clock::now();
  for (const double f : reference) {
    write(f, buf.text);
    buf.ends.push_back(buf.text.size());
    buf.text.push_back('\n');
  }
  row.write_ns = elapsed_ns(start);

  start = Clock::now();
  std::size_t begin = 0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    buf.back[i] = read(std::string_view(buf.text).substr(begin, buf.ends[i] - begin));
    begin = buf.ends[i] + 1;
  }
  row.read_ns = elapsed_ns(start);

  row.values = reference.size();
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(buf.back[i]) != std::bit_cast<std::uint64_t>(reference[i]))
      return Mismatch{i};
  }
  row.verified = true;
  return std::nullopt;
}

std::string_view line(const Buffers& buf, std::size_t i) {
  const std::size_t begin = i == 0 ? 0 : buf.ends[i - 1] + 1;
  return std::string_view(buf.text).substr(begin, buf.ends[i] - begin);
}

void native_write(double f, std::string& out) {
  char tmp[32];
  const auto result = std::to_chars(tmp, tmp + sizeof tmp, f, std::chars_format::scientific);
  out.append(tmp, result.ptr);
}

double native_read(std::string_view s) {
  double value = 0.0;
  const auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  // from_chars rejects a leading '+' only; the other failure is range, where it
  // leaves `value` alone, so fall back to our reader for inf and 0 limits.
  if (result.ec != std::errc{}) return read_double(s);
  return value;
}

}  // namespace

std::vector<double> scaled_reference(const std::vector<double>& base, int n, bool scale_float) {
  if (scale_float) return scaled_by_float(base, n);
  return scaled_from_digits(base_digits(base), n);
}

std::string format_row(const BenchRow& row) {
  return std::to_string(row.n) + ',' + row.engine + ',' + std::to_string(row.write_ns) + ',' +
         std::to_string(row.read_ns) + ',' + std::to_string(row.values) + ',' +
         (row.verified ? "true" : "false");
}

int cmd_bench(const BenchConfig& config, std::ostream& csv, std::ostream& err,
              std::vector<BenchRow>* rows) {
  if (config.value_count == 0 || config.exp_low > config.exp_high) {
    err << "error: need --values >= 1 and --exp-low <= --exp-high\n";
    return kUsageError;
  }
  std::ofstream file;
  std::ostream* sink = &csv;
  if (!config.csv_path.empty()) {
    file.open(config.csv_path);
    if (!file) {
      err << "error: cannot open '" << config.csv_path << "' for writing\n";
      return kUsageError;
    }
    sink = &file;
  }
  *sink << kBenchHeader << '\n';

  const std::vector<double> base = lognormal_values(config.value_count, config.seed);
  const std::vector<BaseDigits> digits = base_digits(base);
  WriterOptions options;
  options.word_fast_path = config.fast;
  const char* engine = config.fast ? "ezfloat-fast" : "ezfloat";

  Buffers buf;
  const auto report = [&](const BenchRow& row, const std::vector<double>& reference,
                          std::size_t i) {
    err << "MISMATCH n=" << row.n << " engine=" << row.engine << " expected "
        << hex_bits(reference[i]) << " wrote " << line(buf, i) << " read "
        << hex_bits(buf.back[i]) << '\n';
    *sink << format_row(row) << '\n';
    sink->flush();
    return kVerificationFailure;
  };

  for (int n = config.exp_low; n <= config.exp_high; ++n) {
    const std::vector<double> reference =
        config.scale_float ? scaled_by_float(base, n) : scaled_from_digits(digits, n);

    BenchRow row{n, engine};
    const auto mismatch = run_engine(
        reference, buf, row,
        [&](double f, std::string& out) { out += double_to_string(f, options); },
        [](std::string_view s) { return read_double(s); });
    if (rows != nullptr) rows->push_back(row);
    if (mismatch) return report(row, reference, mismatch->index);
    *sink << format_row(row) << '\n';

    if (config.native) {
      BenchRow native_row{n, "native"};
      const auto native_mismatch = run_engine(reference, buf, native_row, native_write, native_read);
      if (rows != nullptr) rows->push_back(native_row);
      if (native_mismatch) return report(native_row, reference, native_mismatch->index);
      *sink << format_row(native_row) << '\n';
    }
  }
  sink->flush();
  return kSuccess;
}

}  // namespace ezfloat::cli
