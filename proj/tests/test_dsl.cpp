#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "pfw/dsl.hpp"

using namespace pfw;

TEST_CASE("direct construction") {
  Workspace w = parse_workspace("ring a b c : weights 6 6 6; poly P = a*c - b^2;");
  Polynomial expected = Polynomial::variable(w.ring, "a") * Polynomial::variable(w.ring, "c") -
                        Polynomial::variable(w.ring, "b").pow(2);
  CHECK(w.polynomial("P") == expected);
  CHECK(w.ring->weight(0) == 6);
}

TEST_CASE("matrix block with omitted zero entries") {
  Workspace w = parse_workspace(R"(
ring a b c d e f x : weights 6 6 6 6 6 6 6;
skew 5 M {
  (1,3) = c; (1,4) = b; (1,5) = d;
  (2,3) = x; (2,4) = c; (2,5) = e;
  (3,4) = e; (3,5) = f;
}
)");
  const SkewMatrix& m = w.matrix("M");
  CHECK(m.size() == 5);
  CHECK(m.at(1, 2).is_zero());
  CHECK(m.at(4, 5).is_zero());
  CHECK(m.at(2, 3) == Polynomial::variable(w.ring, "x"));
  CHECK(m.at(3, 2) == -Polynomial::variable(w.ring, "x"));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_workspace("ring a b : weights 1 1;\npoly Q = a +;\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 13);
  }

  CHECK_THROWS_AS(parse_workspace("ring a; poly P = q;"), ParseError);
  CHECK_THROWS_AS(parse_workspace("ring a; poly P = a; poly P = a;"), ParseError);
  CHECK_THROWS_AS(parse_workspace("ring a; skew 3 M { (2,1) = a; }"), ParseError);
  CHECK_THROWS_AS(parse_workspace("ring a; skew 3 M { (1,1) = a; }"), ParseError);
  CHECK_THROWS_AS(parse_workspace("ring a; skew 3 M { (1,4) = a; }"), ParseError);
  CHECK_THROWS_AS(parse_workspace("ring a b : weights 1;"), ParseError);
  CHECK_THROWS_AS(parse_workspace("poly P = 1;"), ParseError);
  CHECK_THROWS_AS(parse_workspace("ring a; poly P = a^-2;"), ParseError);
  CHECK_THROWS_AS(parse_workspace("ring a; varmap m { q = a; }"), ParseError);
}

TEST_CASE("empty ideal and rational coefficients") {
  Workspace w = parse_workspace("ring a b : weights 1 1; ideal I = ; poly P = 3/2*a*b;");
  CHECK(w.ideal("I").empty());
  CHECK(w.polynomial("P").leading_term().coeff == Rational(3, 2));
  std::string text = serialize_workspace(w);
  CHECK(text.find("3/2*a*b") != std::string::npos);
  Workspace again = parse_workspace(text);
  CHECK(serialize_workspace(again) == text);
}

TEST_CASE("round trip on an exercising document") {
  const char* doc = R"(
# comment
ring a b mu : weights 2 2 0;
poly P = -a + 1/3;
poly Q = (a + b)^3 - mu*a*b;
ideal I = a*b - 1, -b^2;
skew 3 M {
  (1,2) = a - b;
  (1,3) = mu;
}
varmap phi {
  a = -b;
  mu = mu + 1;
}
)";
  Workspace w1 = parse_workspace(doc);
  Workspace w2 = parse_workspace(serialize_workspace(w1));
  CHECK(serialize_workspace(w2) == serialize_workspace(w1));
  CHECK(w2.polynomial("Q") == w1.polynomial("Q"));
}

TEST_CASE("round trip on every shipped scenario workspace") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PFW_SCENARIO_DIR)) {
    if (entry.path().extension() != ".usr") continue;
    ++seen;
    Workspace w1 = load_workspace(entry.path().string());
    Workspace w2 = parse_workspace(serialize_workspace(w1));
    CHECK(serialize_workspace(w2) == serialize_workspace(w1));
  }
  CHECK(seen >= 19);
}

TEST_CASE("fuzzed inputs never crash") {
  const std::string alphabet = "ring poly idealskew varmap abcxyz0123456789 ()=+-*^/,;:{}#\n";
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 120);
  for (int trial = 0; trial < 500; ++trial) {
    std::string doc;
    int n = len(rng);
    for (int i = 0; i < n; ++i) doc += alphabet[pick(rng)];
    try {
      parse_workspace(doc);
    } catch (const ParseError&) {
      // positioned rejection is the expected path
    }
  }
}

TEST_CASE("single expressions parse in an existing ring") {
  RingPtr r = make_ring({"a", "nu"}, {1, 0});
  Polynomial p = parse_expression(r, "-(a + nu)^2");
  CHECK(p == -(Polynomial::variable(r, "a") + Polynomial::variable(r, "nu")).pow(2));
  CHECK_THROWS_AS(parse_expression(r, "a +"), ParseError);
  CHECK_THROWS_AS(parse_expression(r, "a b"), ParseError);
}
