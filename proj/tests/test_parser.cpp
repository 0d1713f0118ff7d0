#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "core/parser.hpp"

using namespace wcert;
using expr::parse;
using expr::ParseError;
using expr::print;
using ring::ArithmeticError;

TEST_CASE("round trip: parse(print(e)) == e on a fixed corpus") {
  const std::vector<std::string> corpus = {
      "0",
      "1",
      "42",
      "-1",
      "x1",
      "y3",
      "x1 + x2",
      "x1 - x2",
      "x1*x2",
      "x2*x1",
      "x1^2",
      "x1^0",
      "-x1",
      "-x1 + x2",
      "x1 + x2 + x3",
      "x1 - x2 - x3",
      "x1 - (x2 - x3)",
      "x1*(x2 + x3)",
      "(x1 + x2)*x3",
      "x1*x2*x3",
      "x1*x2 - x2*x1 + 1",
      "(x1 + x2)^3",
      "(x1 - y1)^3",
      "x1^2*x2^2",
      "2*x1",
      "x1*2",
      "-(x1 + x2)",
      "-(x1*x2)",
      "(-x1)*x2",
      "x1^3 - 1",
      "(x1 + 1)^2",
      "inv(2)",
      "inv(2)*x1",
      "inv(x1 + x2)",
      "inv(2 + 3)",
      "sqrt(2)",
      "sqrt(2) + 1",
      "sqrt(2)*sqrt(2)",
      "-sqrt(2)",
      "1 - sqrt(2)",
      "inv(sqrt(2))",
      "(x1 + y1)*(x1 - y1)",
      "y1*y2 + x1*x2",
      "x1^5*y2^4",
      "3*x1^2*x2 + 2*x1 + 1",
      "x10 + y10",
      "(x1 + x2)*(x1 + x2)",
      "1 + 2 + 3",
      "2^3",
      "-(x1^2)",
  };
  CHECK(corpus.size() == 50);
  for (const auto& text : corpus) {
    auto e = parse(text);
    auto printed = print(e);
    CHECK(*parse(printed) == *e);
    // printing is stable: a second round trip prints identically
    CHECK(print(parse(printed)) == printed);
  }
  // redundant parentheses disappear under printing
  CHECK(print(parse("((x1))")) == "x1");
  CHECK(print(parse("(x1*x2)*x3")) == "x1*x2*x3");
}

TEST_CASE("evaluation in the Weyl algebra") {
  auto ctx = weyl::make_weyl_context(3, 1);
  CHECK(expr::eval_weyl(parse("x1*x2 - x2*x1 + 1"), ctx).is_zero());
  CHECK(expr::eval_weyl(parse("x1^0"), ctx) == weyl::WeylElement::one(ctx));
  CHECK(expr::eval_weyl(parse("x2*x1"), ctx).to_string() == "x1*x2 + 1");
  // inv of an invertible central scalar
  auto third = expr::eval_weyl(parse("inv(2)"), ctx);
  CHECK(third == weyl::WeylElement::constant(ctx, 2));  // 2^{-1} = 2 mod 3
  // y-generators, out-of-range generators, sqrt, and non-central inversion
  CHECK_THROWS_AS(expr::eval_weyl(parse("y1"), ctx), ArithmeticError);
  CHECK_THROWS_AS(expr::eval_weyl(parse("x3"), ctx), ArithmeticError);
  CHECK_THROWS_AS(expr::eval_weyl(parse("sqrt(2)"), ctx), ArithmeticError);
  CHECK_THROWS_AS(expr::eval_weyl(parse("inv(x1)"), ctx), ArithmeticError);
  CHECK_THROWS_AS(expr::eval_weyl(parse("inv(3)"), ctx), ArithmeticError);
}

TEST_CASE("evaluation in the tensor square") {
  weyl::TensorSquareContext ctx(3, 1);
  // x1 and y1 commute across the tensor factors, so the freshman dream holds
  auto cube = expr::eval_tensor(parse("(x1 - y1)^3"), ctx);
  auto red = weyl::reduce_tensor(ctx, cube);
  CHECK(red.is_zero());
  CHECK(!expr::eval_tensor(parse("x1*x2 - x2*x1"), ctx).is_zero());
  CHECK(expr::eval_tensor(parse("x1*y1 - y1*x1"), ctx).is_zero());
}

TEST_CASE("scalar evaluation") {
  using ring::FieldDesc;
  using ring::Rat;
  using ring::Scalar;
  CHECK(expr::eval_scalar(parse("inv(2)"), FieldDesc::prime(5)) ==
        Scalar::from_int(FieldDesc::prime(5), 3));
  CHECK(expr::eval_scalar(parse("2^3 - 1"), FieldDesc::rationals()) ==
        Scalar::rational(Rat(7)));
  CHECK(expr::eval_scalar(parse("sqrt(2)*sqrt(2)"), FieldDesc::quadratic(2)) ==
        Scalar::quadratic(2, Rat(2), Rat(0)));
  CHECK(expr::eval_scalar(parse("1 - sqrt(2)"), FieldDesc::quadratic(2)) ==
        Scalar::quadratic(2, Rat(1), Rat(-1)));
  // sqrt of the wrong radicand, sqrt outside a quadratic field, generators
  CHECK_THROWS_AS(expr::eval_scalar(parse("sqrt(3)"), FieldDesc::quadratic(2)), ArithmeticError);
  CHECK_THROWS_AS(expr::eval_scalar(parse("sqrt(2)"), FieldDesc::rationals()), ArithmeticError);
  CHECK_THROWS_AS(expr::eval_scalar(parse("x1"), FieldDesc::rationals()), ArithmeticError);
  CHECK_THROWS_AS(expr::eval_scalar(parse("inv(0)"), FieldDesc::rationals()), ArithmeticError);
}

TEST_CASE("syntax errors carry positions") {
  auto pos_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.pos;
    }
    return static_cast<size_t>(-1);
  };
  CHECK(pos_of("x1 +") == 4);       // missing right operand
  CHECK(pos_of("") == 0);           // empty input
  CHECK(pos_of("x1 ** x2") == 4);   // doubled operator
  CHECK(pos_of("(x1 + x2") == 8);   // unbalanced parenthesis
  CHECK(pos_of("x1 @ x2") == 3);    // unknown character
  CHECK(pos_of("x") == 0);          // generator without an index
  CHECK(pos_of("x1^x2") == 3);      // exponent must be a literal
  CHECK(pos_of("x1 x2") == 3);      // missing operator
  CHECK(pos_of("sqrt 2") == 5);     // sqrt needs parentheses
}
