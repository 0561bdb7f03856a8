#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "ezfloat/reader.hpp"
#include "ezfloat/writer.hpp"

namespace ezfloat {
namespace {

struct Golden {
  std::string kind, input, expected;
};

std::vector<Golden> load() {
  std::ifstream in(EZFLOAT_GOLDENS);
  std::vector<Golden> rows;
  for (std::string line; std::getline(in, line);) {
    std::istringstream fields(line);
    Golden g;
    std::getline(fields, g.kind, '\t');
    std::getline(fields, g.input, '\t');
    std::getline(fields, g.expected, '\t');
    rows.push_back(g);
  }
  return rows;
}

TEST(Goldens, ByteExact) {
  const auto rows = load();
  ASSERT_GE(rows.size(), 50u);
  for (const auto& g : rows) {
    if (g.kind == "read") {
      EXPECT_EQ(cli::hex_bits(read_double(g.input)), g.expected) << g.input;
    } else {
      ASSERT_EQ(g.kind, "write");
      EXPECT_EQ(double_to_string(*cli::parse_hex_bits(g.input)), g.expected) << g.input;
    }
  }
}

}  // namespace
}  // namespace ezfloat
