#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "unimod/errors.hpp"
#include "unimod/param_parser.hpp"

using namespace unimod;

namespace {

std::size_t syntax_position(const std::string& text) {
  try {
    parse_parameter(text, 16);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse examples") {
  const auto d12 = parse_parameter("D12[12]", 24);
  CHECK(d12.m == 24);
  REQUIRE(d12.summands.size() == 1);
  CHECK(d12.summands[0].label == CuspidalLabel::eigenform(12));
  CHECK(d12.summands[0].d == 12);

  const auto g8 = parse_parameter("1[15]+1", 16);
  REQUIRE(g8.summands.size() == 2);
  CHECK(g8.summands[0] == Summand{CuspidalLabel::one(), 15});
  CHECK(g8.summands[1] == Summand{CuspidalLabel::one(), 1});

  CHECK_THROWS_AS(parse_parameter("D24[4]", 32), AmbiguousLabel);
  try {
    parse_parameter("D24[4]", 32);
  } catch (const AmbiguousLabel& e) {
    CHECK(e.weight() == 24);
    CHECK(e.dim() == 2);
  }
  CHECK(parse_parameter("D24.2[4]", 32).summands[0].label == CuspidalLabel::eigenform(24, 2));
}

TEST_CASE("flags, whitespace and labels") {
  CHECK(parse_label("D16!0").central == Central::Zero);
  CHECK(parse_label("D16!nz").central == Central::NonZero);
  CHECK(parse_label("1") == CuspidalLabel::one());
  CHECK(parse_parameter("  D12 [ 4 ] + 1 [7]+ 1 ", 16) == parse_parameter("D12[4]+1[7]+1", 16));
  CHECK(parse_label("D12.1") == CuspidalLabel::eigenform(12));
}

TEST_CASE("bad indices and weights") {
  CHECK_THROWS_AS(parse_label("D13"), BadIndex);
  CHECK_THROWS_AS(parse_label("D10"), BadIndex);
  CHECK_THROWS_AS(parse_label("D14"), BadIndex);
  CHECK_THROWS_AS(parse_label("D24.3"), BadIndex);
  CHECK_THROWS_AS(parse_label("D12.0"), BadIndex);
  CHECK_THROWS_AS(parse_parameter("D12[0]", 24), SyntaxError);
  std::vector<std::string> warnings;
  const auto big = parse_label("D40.3", &warnings);
  CHECK(big.weight == 40);
  CHECK(big.index == 3);
  CHECK(warnings.size() == 1);
}

TEST_CASE("syntax errors report a 1-based column") {
  CHECK(syntax_position("") == 1);
  CHECK(syntax_position("X") == 1);
  CHECK(syntax_position("1[") == 3);
  CHECK(syntax_position("1[15") == 5);
  CHECK(syntax_position("1[15]+") == 7);
  CHECK(syntax_position("1[15]1") == 6);
  CHECK(syntax_position("D") == 2);
  CHECK(syntax_position("D12!x") == 5);
  CHECK(syntax_position("1[a]") == 3);
}

TEST_CASE("format examples") {
  CHECK(format(parse_parameter("D12[12]", 24)) == "D12[12]");
  CHECK(format(parse_parameter("1+1[15]", 16)) == "1[15]+1");
  CHECK(format(parse_parameter("D16!0[16]", 32)) == "D16!0[16]");
  CHECK(format(parse_parameter("1[7]+1+D12[4]", 16)) == "D12[4]+1[7]+1");
  CHECK(format(parse_parameter("D24.2[2]+D24.1[2]", 8)) == "D24.1[2]+D24.2[2]");
}

TEST_CASE("property: parse(format(psi)) == canonical(psi) on enumerated catalogs") {
  for (int m : {8, 16, 24, 32})
    for (const auto& psi : enumerate_parameters(m, 30)) {
      const std::string text = format(psi);
      CAPTURE(text);
      CHECK(parse_parameter(text, m) == canonical(psi));
      CHECK(format(parse_parameter(text, m)) == text);
    }
}

TEST_CASE("property: flags survive the round trip") {
  std::mt19937 rng(41);
  const char* flags[] = {"", "!0", "!nz"};
  for (int t = 0; t < 200; ++t) {
    std::string text;
    const int parts = 1 + int(rng() % 4);
    for (int p = 0; p < parts; ++p) {
      if (p) text += "+";
      const int k = 12 + 2 * int(rng() % 5);
      if (k == 14) {
        text += "1[" + std::to_string(1 + rng() % 9) + "]";
        continue;
      }
      text += "D" + std::to_string(k) + flags[rng() % 3] + "[" + std::to_string(1 + rng() % 6) + "]";
    }
    CAPTURE(text);
    const auto psi = parse_parameter(text, 32);
    CHECK(parse_parameter(format(psi), 32) == canonical(psi));
  }
}

TEST_CASE("property: random input only raises parse errors") {
  std::mt19937 rng(42);
  const std::string alphabet = "1D[].!0nz+ 2468x-";
  int syntax = 0;
  for (int t = 0; t < 20000; ++t) {
    std::string text;
    const std::size_t len = rng() % 12;
    for (std::size_t i = 0; i < len; ++i)
      text += (t % 2) ? char(rng() % 256) : alphabet[rng() % alphabet.size()];
    try {
      parse_parameter(text, 16);
    } catch (const SyntaxError&) {
      ++syntax;
    } catch (const ParseError&) {
    }
  }
  CHECK(syntax > 10000);
}

TEST_CASE("epsilon tables") {
  const auto t = parse_epsilon_table("# fixtures\nD12 D16 -1\n\nD16 D20 +1  # trailing\n");
  CHECK(t.get(CuspidalLabel::eigenform(16), CuspidalLabel::eigenform(12)) == -1);
  CHECK(t.get(CuspidalLabel::eigenform(20), CuspidalLabel::eigenform(16)) == 1);
  CHECK_FALSE(t.get(CuspidalLabel::eigenform(12), CuspidalLabel::eigenform(20)).has_value());
  CHECK_THROWS_AS(parse_epsilon_table("D12 D16\n"), ParseError);
  CHECK_THROWS_AS(parse_epsilon_table("D12 D16 2\n"), ParseError);
  CHECK_THROWS_AS(parse_epsilon_table("D12 Q 1\n"), ParseError);
}
