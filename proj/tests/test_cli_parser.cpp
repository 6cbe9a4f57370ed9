#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pontcalc/bundle_parse.hpp>
#include <pontcalc/ideal_parse.hpp>

#include <random>

using namespace pontcalc;

namespace {

std::string normalize(const std::string& text) {
  return serialize(elaborate(*parse_bundle_expr(text)));
}

// Random syntactically valid bundle expression.
std::string random_bundle_text(std::mt19937& rng, int depth = 0) {
  static const std::vector<std::string> idents = {"a", "b", "c", "zz", "r2d2",
                                                  "x_1"};
  std::uniform_int_distribution<int> kind(0, depth > 3 ? 1 : 4);
  std::uniform_int_distribution<std::size_t> ident(0, idents.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  switch (kind(rng)) {
    case 0:
      return "U(" + idents[ident(rng)] + ")";
    case 1:
      return "1";
    case 2:
      return random_bundle_text(rng, depth + 1) + "+" +
             random_bundle_text(rng, depth + 1);
    case 3:
      return std::to_string(count(rng)) + "*(" +
             random_bundle_text(rng, depth + 1) + ")";
    default:
      return "dual(" + random_bundle_text(rng, depth + 1) + ")";
  }
}

}  // namespace

TEST_CASE("bundle expression parsing") {
  {
    const auto ast = parse_bundle_expr("U(a)+U(b)+2*1");
    const FormalBundle e = elaborate(*ast);
    CHECK(e.roots() == std::vector<std::string>{"a", "b"});
    CHECK(e.lines() == 2);
  }
  {
    const auto ast = parse_bundle_expr("dual(U(a)+1)");
    CHECK(ast->kind == BundleExpr::Kind::dual);
    const FormalBundle e = elaborate(*ast);
    CHECK(e.roots() == std::vector<std::string>{"a"});
    CHECK(e.lines() == 1);
  }
  {
    const auto ast = parse_bundle_expr("U(a)+U(a)");
    const FormalBundle e = elaborate(*ast);
    CHECK(e.roots() == std::vector<std::string>{"a", "a"});
    CHECK(e.lines() == 0);
  }
  {
    const FormalBundle e = elaborate(*parse_bundle_expr("3*1"));
    CHECK(e.roots().empty());
    CHECK(e.lines() == 3);
  }
  {
    const FormalBundle e = elaborate(*parse_bundle_expr("dual(U(b))"));
    CHECK(e.roots() == std::vector<std::string>{"b"});
  }
  {
    // whitespace-insensitive
    const FormalBundle e = elaborate(*parse_bundle_expr("  U( a ) + 2 * 1 "));
    CHECK(e.roots() == std::vector<std::string>{"a"});
    CHECK(e.lines() == 2);
  }
  {
    // nested repeats multiply through
    const FormalBundle e = elaborate(*parse_bundle_expr("2*(U(a)+3*1)"));
    CHECK(e.roots() == std::vector<std::string>{"a", "a"});
    CHECK(e.lines() == 6);
  }
}

TEST_CASE("parse errors carry offsets and expected tokens") {
  try {
    parse_bundle_expr("U()");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    REQUIRE(e.expected().size() == 1);
    CHECK(e.expected()[0] == "identifier");
  }
  try {
    parse_bundle_expr("U(a)+");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  try {
    parse_bundle_expr("");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 0);
    CHECK(e.expected().size() == 5);
  }
  CHECK_THROWS_AS(parse_bundle_expr("0*U(a)"), ValueError);
  CHECK_THROWS_AS(parse_bundle_expr("99999999999999999999*1"), ValueError);
  CHECK_THROWS_AS(parse_bundle_expr("U(a))"), ParseError);
  CHECK_THROWS_AS(parse_bundle_expr("2"), ParseError);
  CHECK_THROWS_AS(parse_bundle_expr("hello"), ParseError);
}

TEST_CASE("serialization round trip is a fixed point") {
  std::mt19937 rng(2025);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string text = random_bundle_text(rng);
    const std::string once = normalize(text);
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("parser survives random byte strings") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(0, 48);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 20000; ++trial) {
    std::string text;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) text.push_back(static_cast<char>(byte(rng)));
    try {
      const auto ast = parse_bundle_expr(text);
      elaborate(*ast);  // either succeeds or throws a library error
    } catch (const Error&) {
      // ParseError or ValueError: fine
    }
  }
}

TEST_CASE("ideal check parser survives random byte strings") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> len(0, 32);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 20000; ++trial) {
    std::string text;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) text.push_back(static_cast<char>(byte(rng)));
    try {
      parse_ideal_check(text, 2);
    } catch (const Error&) {
      // ParseError or ValueError: fine
    }
  }
}

TEST_CASE("elaboration guards against absurd sizes") {
  CHECK_THROWS_AS(elaborate(*parse_bundle_expr("99999999*U(a)")), ValueError);
  CHECK_THROWS_AS(elaborate(*parse_bundle_expr("9999*(9999*U(a))")),
                  ValueError);
}

TEST_CASE("ideal check parsing") {
  {
    const auto [lhs, rhs] = parse_ideal_check("J(4) subset L^2", 2);
    CHECK(lhs.to_string() == "J(4)");
    CHECK(rhs.to_string() == "L^2");
  }
  {
    const auto [lhs, rhs] = parse_ideal_check("L^2*J(1) subset J(2)", 2);
    CHECK(lhs.to_string() == "L^2*J(1)");
    CHECK(rhs.to_string() == "J(2)");
  }
  {
    const auto [lhs, rhs] = parse_ideal_check("(J(1)+L)^2 subset J(0)", 3);
    CHECK(lhs.to_string() == "(J(1) + L)^2");
    CHECK(rhs.to_string() == "J(0)");
  }
  {
    const auto expr = parse_ideal_expr("J(-1)", 2);
    CHECK(expr.to_string() == "J(-1)");
  }
  CHECK_THROWS_AS(parse_ideal_check("J(1) subsetL", 1), ParseError);
  CHECK_THROWS_AS(parse_ideal_check("J(1)", 1), ParseError);
  CHECK_THROWS_AS(parse_ideal_check("K subset L", 1), ParseError);
  CHECK_THROWS_AS(parse_ideal_check("L^0 subset L", 1), ValueError);
  CHECK_THROWS_AS(parse_ideal_check("L^ subset L", 1), ParseError);
}
