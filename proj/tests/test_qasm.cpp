#include "fcqec/qasm.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fcqec/errors.hpp"

namespace fcqec {
namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(FCQEC_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t count_prefix(const std::vector<std::string>& lines, const std::string& prefix) {
  std::size_t c = 0;
  for (const auto& l : lines)
    if (l.rfind(prefix, 0) == 0) ++c;
  return c;
}

TEST(Qasm, GoldenTwoAndThree) {
  EXPECT_EQ(export_qasm(2, QasmProgram::Encode), read_golden("encode_n2.qasm"));
  EXPECT_EQ(export_qasm(3, QasmProgram::Encode), read_golden("encode_n3.qasm"));
}

TEST(Qasm, GateCounts) {
  for (unsigned n = 2; n <= 12; ++n) {
    const auto lines = lines_of(export_qasm(n, QasmProgram::Encode));
    const std::size_t cx = count_prefix(lines, "cx ");
    const std::size_t h = count_prefix(lines, "h ");
    if (n % 2 == 1) {
      EXPECT_EQ(cx, 3 * ((n - 1) / 2));
      EXPECT_EQ(h, 0u);
    } else {
      EXPECT_EQ(cx, 3 * ((n - 2) / 2) + 2);
      EXPECT_EQ(h, 1u);
    }
    EXPECT_EQ(lines.size(), 4 + cx + h);
  }
}

TEST(Qasm, RoundtripWithZLayer) {
  const auto lines = lines_of(export_qasm(5, QasmProgram::Roundtrip, ErrorInsert::Z));
  ASSERT_EQ(lines.size(), 4u + 6 + 5 + 6 + 5);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(lines[4 + 6 + i], "z q[" + std::to_string(i) + "];");
  EXPECT_EQ(lines.back(), "measure q[4] -> c[4];");
  const auto plain = lines_of(export_qasm(5, QasmProgram::Roundtrip, ErrorInsert::I));
  EXPECT_EQ(plain.size(), 4u + 6 + 6 + 5);
}

TEST(Qasm, DecodeIsReversedEncode) {
  const auto enc = lines_of(export_qasm(6, QasmProgram::Encode));
  const auto dec = lines_of(export_qasm(6, QasmProgram::Decode));
  ASSERT_EQ(enc.size(), dec.size());
  for (std::size_t i = 4; i < enc.size(); ++i) EXPECT_EQ(dec[i], enc[enc.size() - 1 - i + 4]);
}

TEST(Qasm, Errors) {
  EXPECT_THROW(export_qasm(1, QasmProgram::Encode), BadQubitCount);
  EXPECT_THROW(export_qasm(13, QasmProgram::Encode), BadQubitCount);
  EXPECT_THROW(export_qasm(3, QasmProgram::Encode, ErrorInsert::X), InvalidArgument);
  EXPECT_THROW(parse_qasm_program("both"), InvalidArgument);
  EXPECT_THROW(parse_error_insert("W"), InvalidArgument);
  EXPECT_EQ(parse_error_insert("Y"), ErrorInsert::Y);
}

}  // namespace
}  // namespace fcqec
