#include <doctest.h>

#include "sn/action.hpp"
#include "sn/sampling.hpp"
#include "sn/units.hpp"

using namespace sn;

TEST_CASE("monomials act by shifting exponents") {
  const PolyElement one = PolyElement::monomial(MultiIndex{0});
  CHECK(apply(Element::y(1, 1), one).is_zero());
  CHECK(apply(Element::x(1, 1), one) == PolyElement::monomial(MultiIndex{1}));
  CHECK(apply(Element::y(1, 1, 2), MultiIndex{5}) == PolyElement::monomial(MultiIndex{3}));
  MultiIndex out;
  CHECK_FALSE(apply_monomial(Monomial::make({0}, {2}), MultiIndex{1}, out));
}

TEST_CASE("E00 projects onto constants") {
  const Element e00 = idempotent(1, CoordSet{1});
  CHECK(apply(e00, MultiIndex{0}) == PolyElement::monomial(MultiIndex{0}));
  CHECK(apply(e00, MultiIndex{3}).is_zero());
  const Element e12 = matrix_unit(1, CoordSet{1}, MultiIndex{1}, MultiIndex{2});
  CHECK(apply(e12, MultiIndex{2}) == PolyElement::monomial(MultiIndex{1}));
  CHECK(apply(e12, MultiIndex{1}).is_zero());
}

TEST_CASE("theta moves the axis monomials") {
  const Element t = theta(2, CoordSet{1, 2}, 1, 2);
  CHECK(apply(t, MultiIndex{2, 0}) == PolyElement::monomial(MultiIndex{1, 0}));
  CHECK(apply(t, MultiIndex{0, 0}) == PolyElement::monomial(MultiIndex{0, 1}));
  CHECK(apply(t, MultiIndex{0, 4}) == PolyElement::monomial(MultiIndex{0, 5}));
  CHECK(apply(t, MultiIndex{1, 1}) == PolyElement::monomial(MultiIndex{1, 1}));
}

TEST_CASE("action is a module structure") {
  Sampler rng(5);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 30; ++t) {
      const Element a = rng.element(n, 3, 3);
      const Element b = rng.element(n, 3, 3);
      const PolyElement p = rng.poly(n, 3, 4);
      CHECK(apply(a * b, p) == apply(a, apply(b, p)));
    }
}

TEST_CASE("polynomial text") {
  PolyElement p(2);
  p.add_term(MultiIndex{2, 0}, 1);
  p.add_term(MultiIndex{0, 0}, Scalar(-1, 2));
  CHECK(to_string(p) == "-1/2 + x1^2");
  CHECK(to_string(PolyElement(1)) == "0");
}
