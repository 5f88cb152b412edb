#include <doctest.h>

#include "sn/element.hpp"
#include "sn/errors.hpp"

using namespace sn;

TEST_CASE("y_i x_i = 1 but x_i y_i is not") {
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) {
      CHECK(Element::y(n, i) * Element::x(n, i) == Element::one(n));
      CHECK(Element::x(n, i) * Element::y(n, i) != Element::one(n));
    }
}

TEST_CASE("monomial product cancels y against x") {
  const Monomial a = Monomial::make({2}, {3});
  const Monomial b = Monomial::make({1}, {0});
  CHECK(monomial_mul(a, b) == Monomial::make({2}, {2}));
  CHECK(monomial_mul(b, a) == Monomial::make({3}, {3}));
  const Monomial c = Monomial::make({0, 1}, {2, 0});
  const Monomial d = Monomial::make({5, 0}, {0, 1});
  CHECK(monomial_mul(c, d) == Monomial::make({3, 1}, {0, 1}));
}

TEST_CASE("variables from different coordinates commute") {
  const Element x1 = Element::x(2, 1);
  const Element y2 = Element::y(2, 2);
  CHECK(x1 * y2 == y2 * x1);
}

TEST_CASE("matrix units expand to 2^|I| monomials") {
  const Element e00 = matrix_unit(1, CoordSet{1}, MultiIndex{0}, MultiIndex{0});
  CHECK(e00 == Element::one(1) - Element::x(1, 1) * Element::y(1, 1));
  CHECK(e00 * e00 == e00);
  const Element e = matrix_unit(3, CoordSet{1, 3}, MultiIndex{1, 0}, MultiIndex{0, 2});
  CHECK(e.size() == 4);
  CHECK(idempotent(2, CoordSet{}) == Element::one(2));
  CHECK_THROWS_AS(matrix_unit(2, CoordSet{1}, MultiIndex{0, 0}, MultiIndex{0}), ArgumentError);
  CHECK_THROWS_AS(matrix_unit(2, CoordSet{3}, MultiIndex{0}, MultiIndex{0}), ArgumentError);
}

TEST_CASE("involution is an anti-automorphism") {
  const Element a = Element::x(2, 1, 2) * Element::y(2, 2) + Element::scalar(2, Scalar(1, 2));
  const Element b = Element::y(2, 1) - Element::x(2, 2, 3);
  CHECK(involution(a * b) == involution(b) * involution(a));
  CHECK(involution(involution(a)) == a);
  CHECK(involution(Element::x(1, 1)) == Element::y(1, 1));
}

TEST_CASE("powers") {
  CHECK(pow(Element::x(1, 1), 0) == Element::one(1));
  CHECK(pow(Element::y(1, 1), 3) == Element::y(1, 1, 3));
  CHECK_THROWS_AS(pow(Element::x(1, 1), -1), ArgumentError);
}

TEST_CASE("filtration dimensions") {
  CHECK(filtration_dim(1, 0) == 1);
  CHECK(filtration_dim(1, 1) == 3);
  CHECK(filtration_dim(1, 2) == 6);
  CHECK(filtration_dim(2, 2) == 15);
  CHECK(filtration_dim(3, 8) == 3003);
}

TEST_CASE("canonical text") {
  CHECK(to_string(Element(2)) == "0");
  CHECK(to_string(Element::one(1)) == "1");
  CHECK(to_string(Element::one(1) - Element::x(1, 1) * Element::y(1, 1)) == "1 - x1*y1");
  const Element a = Element::scalar(2, Scalar(1, 2)) * Element::x(2, 2) + Element::y(2, 1, 3);
  CHECK(to_string(a) == "1/2*x2 + y1^3");
  CHECK(to_string(Scalar(-2) * Element::x(2, 1, 2) * Element::y(2, 1)) == "-2*x1^2*y1");
}

TEST_CASE("operands must share n") {
  CHECK_THROWS_AS(Element::x(1, 1) + Element::x(2, 1), DimensionError);
  CHECK_THROWS_AS(Element::x(1, 1) * Element::x(2, 1), DimensionError);
  CHECK_THROWS_AS(Element::x(2, 3), ArgumentError);
}
