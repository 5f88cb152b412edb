#include <doctest.h>

#include "sn/automorphism.hpp"
#include "sn/sampling.hpp"
#include "sn/units.hpp"

using namespace sn;

TEST_CASE("generators act as documented") {
  const Automorphism s = Automorphism::transposition(2, 1, 2);
  CHECK(aut_apply(s, Element::x(2, 1)) == Element::x(2, 2));
  const Automorphism t = Automorphism::torus({Scalar(2), Scalar(1)});
  CHECK(aut_apply(t, Element::x(2, 1)) == Scalar(2) * Element::x(2, 1));
  CHECK(aut_apply(t, Element::y(2, 1)) == Scalar(1, 2) * Element::y(2, 1));
  const Element th = theta(2, CoordSet{1, 2}, 1, 2);
  const Element th_inv = theta(2, CoordSet{1, 2}, 2, 1);
  const Automorphism w = Automorphism::inner(th, th_inv);
  CHECK(aut_apply(w, Element::x(2, 1)) == th * Element::x(2, 1) * th_inv);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Automorphism::make({1, 1}, {Scalar(1), Scalar(1)}, Element::one(2), Element::one(2)), ArgumentError);
  CHECK_THROWS_AS(Automorphism::torus({Scalar(0)}), ArgumentError);
  CHECK_THROWS_AS(Automorphism::inner(Element::scalar(1, 2), Element::scalar(1, Scalar(1, 2))), MembershipError);
  CHECK_THROWS_AS(Automorphism::inner(theta(2, CoordSet{1, 2}, 1, 2), Element::one(2)), NotAUnit);
}

TEST_CASE("composition, inverse and rigidity") {
  Sampler rng(8);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 10; ++t) {
      const Automorphism a = rng.automorphism(n, 3);
      const Automorphism b = rng.automorphism(n, 2);
      const Element e = rng.element(n, 3, 2);
      CHECK(aut_apply(aut_compose(a, b), e) == aut_apply(a, aut_apply(b, e)));
      CHECK(images_equal(aut_compose(a, aut_invert(a)), Automorphism::identity(n)));
      CHECK(rigidity_equal(aut_compose(aut_invert(a), a), Automorphism::identity(n)));
    }
}

TEST_CASE("commutator of a transposition and a torus element") {
  const Automorphism c =
      aut_commutator(Automorphism::transposition(2, 1, 2), Automorphism::torus({Scalar(2), Scalar(3)}));
  CHECK(images_equal(c, Automorphism::torus({Scalar(3, 2), Scalar(2, 3)})));
}

TEST_CASE("jacobians") {
  const Automorphism s = Automorphism::permutation({2, 3, 1});
  CHECK(perm_sign(s.perm) == 1);
  CHECK(jacobian(Automorphism::transposition(3, 1, 3)) == -1);
  CHECK(jacobian(Automorphism::torus({Scalar(2), Scalar(-3)})) == -6);
  const Automorphism w = Automorphism::inner(theta(2, CoordSet{1, 2}, 1, 2), theta(2, CoordSet{1, 2}, 2, 1));
  CHECK(jacobian(w) == 1);
  CHECK(jacobian_exotic(w) == -1);
  CHECK(theta_parity(theta(2, CoordSet{1, 2}, 1, 2)) == 1);
  const Element e00 = idempotent(1, CoordSet{1});
  const Automorphism w1 = Automorphism::inner(Element::one(1) + e00, Element::one(1) - Scalar(1, 2) * e00);
  CHECK(jacobian(w1) == 1);
  CHECK(jacobian_exotic(w1) == 2);
  CHECK_THROWS_AS(jacobian_exotic(Automorphism::identity(3)), UnsupportedError);
}

TEST_CASE("abelianization classes multiply") {
  Sampler rng(9);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 10; ++t) {
      const Automorphism a = rng.automorphism(n, 2);
      const Automorphism b = rng.automorphism(n, 2);
      CHECK(abelianization_class(aut_compose(a, b)) ==
            class_product(abelianization_class(a), abelianization_class(b)));
    }
  const Automorphism s = Automorphism::transposition(2, 1, 2);
  CHECK(to_string(abelianization_class(s)) == "(-1, 1, 0)");
  CHECK(to_string(abelianization_class(Automorphism::torus({Scalar(3)}))) == "(3, 1)");
  CHECK(to_string(abelianization_class(Automorphism::identity(3))) == "(+1, 1)");
}
