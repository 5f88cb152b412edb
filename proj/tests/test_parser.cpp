#include <doctest.h>

#include "random_ast.hpp"
#include "snc/eval.hpp"
#include "snc/parser.hpp"

using namespace snc;
using sn::Element;

TEST_CASE("basic shapes") {
  const Ast p = parse_expression("y1*x1", 1);
  REQUIRE(p.kind == Ast::Kind::Product);
  CHECK(p.children.size() == 2);
  CHECK(p.children[0] == Ast::variable('y', 1));
  CHECK(evaluate(p, 1).element == Element::one(1));

  const Ast e = parse_expression("E[1,2](0,0|0,0)", 2);
  CHECK(e == Ast::mat_unit({1, 2}, {0, 0}, {0, 0}));

  const Ast t = parse_expression("theta[1,2;2,1]^-1", 2);
  CHECK(t == Ast::power(Ast::theta({1, 2}, 2, 1), -1));
  CHECK(evaluate(t, 2).element == evaluate_text("theta[1,2;1,2]", 2).element);

  CHECK(parse_expression("x*y", 1) == parse_expression("x1*y1", 1));
  CHECK(parse_expression("(x1)", 1) == Ast::variable('x', 1));
  CHECK(parse_expression("-3/6", 1) == Ast::sum({Ast::rational(sn::Scalar(1, 2))}, {true}));
}

TEST_CASE("precedence") {
  CHECK(evaluate_text("1 + 2*x1^2", 1).element ==
        Element::one(1) + sn::Scalar(2) * sn::pow(Element::x(1, 1), 2));
  CHECK(evaluate_text("x1 - y1 - 1", 1).element == Element::x(1, 1) - Element::y(1, 1) - Element::one(1));
  CHECK(evaluate_text("2*(x1 - 1)^2", 1).element ==
        sn::Scalar(2) * (Element::x(1, 1) - Element::one(1)) * (Element::x(1, 1) - Element::one(1)));
}

TEST_CASE("error positions") {
  auto position = [](const char* text, int n) {
    try {
      parse_expression(text, n);
    } catch (const ParseError& e) {
      return std::pair<int, int>{e.line(), e.column()};
    }
    return std::pair<int, int>{0, 0};
  };
  CHECK(position("x1 + ", 1) == std::pair<int, int>{1, 6});
  CHECK(position("x3", 2) == std::pair<int, int>{1, 2});
  CHECK(position("1 +\n  *y1", 1) == std::pair<int, int>{2, 3});
  CHECK(position("E[2,1](0,0|0,0)", 2).first == 1);
  CHECK(position("theta[1,2;1,1]", 2).first == 1);
  CHECK(position("E[1](0,0|0)", 2).first == 1);
  CHECK(position("x", 2).first == 1);
  CHECK(position("1/0", 1).first == 1);
  CHECK(position("(x1", 1).first == 1);
  CHECK(position("x1 y1", 1).first == 1);
}

TEST_CASE("printer round trip") {
  sn::Sampler rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform(1, 3);
    const Ast a = sntest::random_ast(rng, n, 3);
    const std::string text = to_text(a);
    INFO(text);
    CHECK(parse_expression(text, n) == a);
  }
}
