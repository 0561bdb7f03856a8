// Regenerates tests/data/goldens.tsv from the exact oracle. The output is
// committed; tests compare the library against it byte for byte.
//
//   read  <text>  <bits>    text parsed, nearest double by exact rationals
//   write <bits>  <text>    shortest digits by exhaustive search
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "ezfloat/decimal.hpp"
#include "ezfloat/oracle.hpp"

namespace {

using ezfloat::cli::hex_bits;

double oracle_read(const std::string& text) {
  const auto parsed = ezfloat::parse_decimal(text);
  if (const auto* special = std::get_if<ezfloat::SpecialValue>(&parsed)) {
    switch (*special) {
      case ezfloat::SpecialValue::kNaN:
        return std::nan("");
      case ezfloat::SpecialValue::kPositiveInfinity:
        return HUGE_VAL;
      case ezfloat::SpecialValue::kNegativeInfinity:
        return -HUGE_VAL;
    }
  }
  return ezfloat::oracle::nearest_double_exact(std::get<ezfloat::DecimalSci>(parsed));
}

// Independent rendering: d.ddd...E<exp>, one padding zero for a lone digit.
std::string oracle_write(double f) {
  if (std::isnan(f)) return "NaN";
  if (std::isinf(f)) return f > 0 ? "Infinity" : "-Infinity";
  if (f == 0) return std::signbit(f) ? "-0.0" : "0.0";
  const auto sd = ezfloat::oracle::shortest_by_search(f);
  std::string digits = std::to_string(sd.digits);
  while (digits.size() > 1 && digits.back() == '0') {
    digits.pop_back();
  }
  const long exponent = sd.point + static_cast<long>(std::to_string(sd.digits).size()) - 1;
  std::string frac = digits.substr(1);
  if (frac.empty()) frac = "0";
  return std::string(std::signbit(f) ? "-" : "") + digits[0] + "." + frac + "E" +
         std::to_string(exponent);
}

const std::vector<std::string> kReadInputs = {
    "0", "-0", "0.0", "-0.0", "1", "-1", "1.0", "0.1", "0.3", "0.5", ".5", "5.", "123.456",
    "1e0", "1E0", "1e+0", "1e-0", "2.5e-3", "9007199254740993", "9007199254740992",
    "9007199254740995", "1.7976931348623157E308", "1.7976931348623158e308",
    "1.7976931348623159e308", "1e309", "-1e309", "2.2250738585072014E-308",
    "2.2250738585072011e-308", "4.9E-324", "5E-324", "2.4703282292062327e-324",
    "2.4703282292062328e-324", "1e-400", "3.14159265358979323846264338327950288",
    "0.000000000000000000000000000000000001", "100000000000000000000000", "1e23",
    "8.5e-323", "123456789012345678901234567890e-10", "0e999999999999", "1e0000000000000000001",
    "NaN", "Infinity", "-Infinity", "+7", "6.02214076e23", "1.00000000000000011102230246251565404236316680908203125",
    "1.00000000000000011102230246251565404236316680908203124",
    "1.00000000000000011102230246251565404236316680908203126",
};

const std::vector<std::uint64_t> kWriteBits = {
    0x0000000000000000, 0x8000000000000000, 0x0000000000000001, 0x8000000000000001,
    0x000FFFFFFFFFFFFF, 0x0010000000000000, 0x7FEFFFFFFFFFFFFF, 0x3FF0000000000000,
    0xBFF0000000000000, 0x3FB999999999999A, 0x3FD3333333333333, 0x3FE0000000000000,
    0x4000000000000000, 0x4024000000000000, 0x4059000000000000, 0x44B52D02C7E14AF6,
    0x3FF0000000000001, 0x3FEFFFFFFFFFFFFF, 0x7FF0000000000000, 0xFFF0000000000000,
    0x7FF8000000000000, 0x0000000000000002, 0x0000000000000003, 0x4340000000000000,
    0x433FFFFFFFFFFFFF, 0x7FE0000000000000, 0x0020000000000000, 0x3E112E0BE826D695,
    0x400921FB54442D18, 0x4005BF0A8B145769, 0x3CB0000000000000, 0x41DFFFFFFFC00000,
    0x4415AF1D78B58C40, 0x0010000000000001, 0x000FFFFFFFFFFFFE, 0x3FF199999999999A,
    0x4197D78400000000, 0x3EB0C6F7A0B5ED8D, 0x7FEFFFFFFFFFFFFE, 0x0350000000000000,
};

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "goldens.tsv";
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return 1;
  }
  for (const auto& text : kReadInputs) {
    out << "read\t" << text << '\t' << hex_bits(oracle_read(text)) << '\n';
  }
  for (const auto bits : kWriteBits) {
    const double f = std::bit_cast<double>(bits);
    out << "write\t" << hex_bits(f) << '\t' << oracle_write(f) << '\n';
  }
  std::cout << "wrote " << kReadInputs.size() + kWriteBits.size() << " rows to " << path << '\n';
  return 0;
}
