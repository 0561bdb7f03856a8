#include <benchmark/benchmark.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ezfloat/reader.hpp"
#include "ezfloat/writer.hpp"

namespace {

// 10^X with X standard normal, the same shape the bench subcommand uses.
const std::vector<double>& values() {
  static const std::vector<double> v = [] {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    std::vector<double> out(4096);
    for (auto& x : out) x = std::pow(10.0, normal(rng));
    return out;
  }();
  return v;
}

const std::vector<std::string>& texts() {
  static const std::vector<std::string> t = [] {
    std::vector<std::string> out;
    for (const double f : values()) out.push_back(ezfloat::double_to_string(f));
    return out;
  }();
  return t;
}

void BM_Write(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ezfloat::double_to_string(values()[i++ & 4095]));
  }
}
BENCHMARK(BM_Write);

void BM_WriteFast(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ezfloat::double_to_string_fast(values()[i++ & 4095]));
  }
}
BENCHMARK(BM_WriteFast);

void BM_Read(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ezfloat::read_double(texts()[i++ & 4095]));
  }
}
BENCHMARK(BM_Read);

void BM_ReadSubnormal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ezfloat::read_double("4.9406564584124654E-324"));
}
BENCHMARK(BM_ReadSubnormal);

void BM_NativeWrite(benchmark::State& state) {
  char buf[32];
  std::size_t i = 0;
  for (auto _ : state) {
    const auto r = std::to_chars(buf, buf + sizeof buf, values()[i++ & 4095], std::chars_format::scientific);
    benchmark::DoNotOptimize(r.ptr);
  }
}
BENCHMARK(BM_NativeWrite);

void BM_NativeRead(benchmark::State& state) {
  std::size_t i = 0;
  double out = 0.0;
  for (auto _ : state) {
    const std::string& s = texts()[i++ & 4095];
    std::from_chars(s.data(), s.data() + s.size(), out);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_NativeRead);

}  // namespace

BENCHMARK_MAIN();
