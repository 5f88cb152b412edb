#include <doctest.h>

#include "sn/laurent.hpp"
#include "sn/laurent_matrix.hpp"
#include "sn/units.hpp"

using namespace sn;

TEST_CASE("exact division") {
  const CoordSet v{1};
  const LaurentElement x = LaurentElement::monomial(1, v, MultiIndex{1});
  const LaurentElement one = LaurentElement::constant(1, v, 1);
  const LaurentElement a = (x + one) * (x - one);
  CHECK(exact_divide(a, x + one) == x - one);
  CHECK(exact_divide(x, LaurentElement::monomial(1, v, MultiIndex{-2})) == LaurentElement::monomial(1, v, MultiIndex{3}));
  CHECK_THROWS_AS(exact_divide(x + one, x - one), ArgumentError);
  CHECK_THROWS_AS(exact_divide(x, LaurentElement(1, v)), ArgumentError);
}

TEST_CASE("laurent text") {
  const CoordSet v{1, 2};
  LaurentElement a(2, v);
  a.add_term(MultiIndex{1, -1}, 2);
  a.add_term(MultiIndex{0, 0}, -1);
  CHECK(to_string(a) == "2*x1*x2^-1 - 1");
}

TEST_CASE("matrix image of theta and its determinant") {
  const Element t = theta(2, CoordSet{1, 2}, 1, 2);
  const LaurentMatrix m = matrix_image(t, CoordSet{2});
  CHECK_FALSE(m.is_identity());
  const LaurentUnit d = det_degree(m);
  CHECK(d.lambda == 1);
  CHECK(d.gamma[0] == -1);
  CHECK(ind_i_det(t, 1) == 1);
  CHECK(ind_i_det(t, 2) == -1);
}

TEST_CASE("scalar mu has a constant determinant") {
  const Element m = mu(CoordSet{2}, Element::scalar(2, 5));
  const LaurentUnit d = det_degree(matrix_image(m, CoordSet{2}));
  CHECK(d.lambda == 5);
  CHECK(d.gamma.is_zero());
}

TEST_CASE("matrix image requires the right level") {
  CHECK_THROWS_AS(matrix_image(Element::x(2, 1), CoordSet{1}), MembershipError);
}
