#include <doctest.h>

#include "sn/units.hpp"
#include "snc/eval.hpp"

using namespace snc;
using sn::Element;
using sn::Scalar;

TEST_CASE("closed-form constructors") {
  CHECK(evaluate_text("mu[1](2)", 2).element == sn::mu(sn::CoordSet{1}, Element::scalar(2, 2)));
  CHECK(evaluate_text("theta[1,2;1,2]", 2).element == sn::theta(2, sn::CoordSet{1, 2}, 1, 2));
  CHECK(evaluate_text("E[1](2|3)", 1).element == sn::matrix_unit(1, sn::CoordSet{1}, {2}, {3}));
  CHECK(evaluate_text("elem[1](5; 0; 1)", 1).element ==
        Element::one(1) + Scalar(5) * sn::matrix_unit(1, sn::CoordSet{1}, {0}, {1}));
}

TEST_CASE("inverses are found and exact") {
  const char* units[] = {"mu[1](3)^-1", "theta[1,2;2,1]^-2", "(1 + E[1](0|0))^-1",
                         "elem[1](x2; 0; 1)^-1", "(2 - E[2](1|1) + E[2](1|2))^-1"};
  for (const char* text : units) {
    INFO(text);
    const int n = 2;
    Value v = evaluate_text(text, n);
    REQUIRE(v.inverse.has_value());
    CHECK(v.element * *v.inverse == Element::one(n));
    CHECK(*v.inverse * v.element == Element::one(n));
  }
}

TEST_CASE("non-units are rejected") {
  CHECK_THROWS_AS(evaluate_text("x1^-1", 1), sn::NotAUnit);
  CHECK_THROWS_AS(evaluate_text("0^-1", 1), sn::NotAUnit);
  CHECK_THROWS_AS(evaluate_text("E[1](0|0)^-1", 1), sn::NotAUnit);
  CHECK_THROWS_AS(evaluate_text("mu[1](x2)^-1", 2), sn::NotAUnit);
  CHECK(!find_inverse(Element::x(1, 1)).has_value());
}

TEST_CASE("square rule") {
  // (1 + e)^-1 = 1 - e/2 for an idempotent e.
  const Element e = sn::idempotent(2, sn::CoordSet{1});
  const auto inv = find_inverse(Element::one(2) + e);
  REQUIRE(inv.has_value());
  CHECK(*inv == Element::one(2) - Scalar(1, 2) * e);
  // 1 - e is idempotent but not invertible.
  CHECK(!find_inverse(Element::one(2) - e).has_value());
}
