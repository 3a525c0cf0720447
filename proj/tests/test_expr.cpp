#include <doctest.h>

#include <random>

#include "leavitt/error.hpp"
#include "leavitt/expr.hpp"

using namespace leavitt;
using K = Expr::Kind;

TEST_CASE("parse builds the expected tree") {
  Expr e = parse("x1*y2 + 3*[x1, x2^2]");
  REQUIRE(e.kind == K::Sum);
  CHECK(e.children[0].kind == K::Product);
  const Expr &rhs = e.children[1];
  REQUIRE(rhs.kind == K::Product);
  CHECK(rhs.children[0].kind == K::Integer);
  REQUIRE(rhs.children[1].kind == K::Bracket);
  CHECK(rhs.children[1].children[1].kind == K::Power);
  CHECK(rhs.children[1].children[1].exponent == 2);

  CHECK(parse("[x1, x2]").kind == K::Bracket);
  CHECK(parse("x12").letters == std::vector<std::uint64_t>{12});
  CHECK(parse("1 - 2 - 3").children[0].kind == K::Difference);
  CHECK(parse("y[2,1]").kind == K::WordTerm);
  CHECK(parse("x[]").letters.empty());
  CHECK(parse("  ( x1 ) ").kind == K::Group);
  CHECK(parse("-x1 + 2").children[0].kind == K::Negate);
}

TEST_CASE("syntax errors carry positions") {
  auto position_of = [](const char *s) {
    try {
      parse(s);
    } catch (const ParseError &e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of("x1 y2") == 3);
  CHECK(position_of("x1 +") == 4);
  CHECK(position_of("[x1 x2]") == 4);
  CHECK(position_of("x1^0") == 3);
  CHECK(position_of("x") == 1);
  CHECK(position_of("x1 * * y1") == 5);
  CHECK(position_of("2 / x1") == 4);
  CHECK(position_of("") == 0);
  CHECK(position_of("x99999999999999999999999") == 1);
}

TEST_CASE("evaluate examples") {
  FieldSpec q(0);
  CHECK(evaluate_cohn(parse("1 - x1*y1 - x2*y2"), q, 2) == ideal_generator(2, q));
  CHECK(evaluate_leavitt(parse("1 - x1*y1 - x2*y2"), q, 2).is_zero());
  CHECK(evaluate_leavitt(parse("[y1,x1]+[y2,x2]+[y3,x3]"), FieldSpec(2), 3)
            .is_zero());
  CHECK(evaluate_leavitt(parse("[y1,x1]+[y2,x2]+[y3,x3]"), q, 3) ==
        LeavittElement::from_int(2, q, 3));
  CHECK(evaluate_cohn(parse("y1*x1"), q, 2) == CohnElement::one(q, 2));
  CHECK(evaluate_cohn(parse("x[1,2]*y[2]"), q, 2) ==
        evaluate_cohn(parse("x1*x2*y2"), q, 2));
  CHECK(evaluate_cohn(parse("1/2 + 1/3"), q, 2).to_string() == "5/6");
  CHECK(evaluate_cohn(parse("1/2"), FieldSpec(5), 2).to_string() == "3");
}

TEST_CASE("evaluation errors") {
  FieldSpec q(0);
  CHECK_THROWS_AS(evaluate_cohn(parse("x3"), q, 2), DomainError);
  CHECK_THROWS_AS(evaluate_cohn(parse("x12"), q, 11), DomainError);
  CHECK_THROWS_AS(evaluate_cohn(parse("y[1,0]"), q, 2), DomainError);
  CHECK_THROWS_AS(evaluate_cohn(parse("x1/0"), q, 2), DomainError);
  CHECK_THROWS_AS(evaluate_cohn(parse("x1/5"), FieldSpec(5), 2), DomainError);
}

TEST_CASE("matrix mode embeds on the diagonal") {
  SessionConfig cfg{3, 2, FieldSpec(2), Mode::Matrix};
  Value v = evaluate(parse("x1*y1"), cfg);
  REQUIRE(std::holds_alternative<LeavittMatrix>(v));
  const auto &m = std::get<LeavittMatrix>(v);
  CHECK(m.size() == 2);
  CHECK(m.at(1, 1) == evaluate_leavitt(parse("x1*y1"), cfg.field, 3));
  CHECK(m.at(0, 1).is_zero());
  CHECK(parse_mode("cohn") == Mode::Cohn);
  CHECK_THROWS_AS(parse_mode("ring"), DomainError);
}

TEST_CASE("canonical element text parses back to the same element") {
  std::mt19937_64 rng(31);
  for (std::uint64_t p : {0, 3, 7}) {
    FieldSpec s(p);
    for (int k = 0; k < 200; ++k) {
      CohnElement c = random_element(3, s, 3, 5, rng);
      CHECK(parse_cohn(c.to_string(), s, 3) == c);
      LeavittElement l = normal_form(c);
      CHECK(parse_leavitt(l.to_string(), s, 3) == l);
    }
  }
}

TEST_CASE("print/parse round trip") {
  std::mt19937_64 rng(32);
  for (const char *src :
       {"x1*y2 + 3*[x1, x2^2]", "-(x1 - y2)^3/4", "[[x1,x2],[x1,x2^2]]",
        "x[1,2]*y[] + y[3] - 7", "2*(1 + x12)"}) {
    Expr e = parse(src);
    CHECK(parse(print(e)) == e);
    CHECK(print(parse(print(e))) == print(e));
  }
  for (int k = 0; k < 200; ++k) {
    CohnElement c = random_element(4, FieldSpec(0), 3, 5, rng);
    Expr e = parse(c.to_string());
    CHECK(print(e) == c.to_string());
    CHECK(parse(print(e)) == e);
  }
}

TEST_CASE("evaluate is a homomorphism of expressions") {
  std::mt19937_64 rng(33);
  FieldSpec s(5);
  for (int k = 0; k < 100; ++k) {
    CohnElement a = random_element(3, s, 2, 3, rng);
    CohnElement b = random_element(3, s, 2, 3, rng);
    std::string A = "(" + a.to_string() + ")", B = "(" + b.to_string() + ")";
    CHECK(parse_cohn(A + "*" + B, s, 3) == a * b);
    CHECK(parse_cohn(A + "+" + B, s, 3) == a + b);
    CHECK(parse_cohn(A + "-" + B, s, 3) == a - b);
    CHECK(parse_cohn(A + "^2", s, 3) == a * a);
    CHECK(parse_cohn("[" + A + "," + B + "]", s, 3) == bracket(a, b));
    CHECK(parse_leavitt(A + "*" + B, s, 3) == normal_form(a * b));
  }
}
