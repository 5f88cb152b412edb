#include <doctest.h>

#include "sn/ideal.hpp"
#include "sn/units.hpp"

using namespace sn;

TEST_CASE("theta_ij(J) theta_ji(J) = 1") {
  for (int n = 2; n <= 3; ++n)
    for (CoordSet J : subsets_of_size(n, 2)) {
      const auto e = J.elements();
      CHECK(theta(n, J, e[0], e[1]) * theta(n, J, e[1], e[0]) == Element::one(n));
    }
  CHECK_THROWS_AS(theta(2, CoordSet{1, 2}, 1, 1), ArgumentError);
  CHECK_THROWS_AS(theta(3, CoordSet{1, 2}, 1, 3), ArgumentError);
}

TEST_CASE("mu of a scalar is a unit with the reciprocal inverse") {
  const Element m = mu(CoordSet{1}, Element::scalar(2, 3));
  const Element w = mu(CoordSet{1}, Element::scalar(2, Scalar(1, 3)));
  CHECK(m * w == Element::one(2));
  CHECK(mu(CoordSet{}, Element::x(2, 1)) == Element::x(2, 1));
  CHECK_THROWS_AS(mu(CoordSet{1}, Element::x(2, 1)), ArgumentError);
}

TEST_CASE("atoms and words invert exactly") {
  const int n = 3;
  GeneratorWord w{n, {}};
  w.atoms.push_back(Atom::theta(n, CoordSet{1, 2, 3}, 1, 3, 2));
  w.atoms.push_back(Atom::mu(n, CoordSet{2}, Element::scalar(n, -2)));
  w.atoms.push_back(Atom::elementary(n, CoordSet{1}, Scalar(5) * Element::x(n, 3, 2), MultiIndex{0}, MultiIndex{1}, -1));
  const Element u = word_to_element(w);
  const Element v = word_to_element(word_inverse(w));
  CHECK(u * v == Element::one(n));
  CHECK(v * u == Element::one(n));
}

TEST_CASE("monomial mu payloads are not units") {
  const Atom a = Atom::mu(2, CoordSet{1}, Element::x(2, 2));
  CHECK_FALSE(a.invertible());
  CHECK_THROWS_AS(atom_inverse(a), NotAUnit);
  CHECK_THROWS_AS(Atom::mu(2, CoordSet{1}, Element::x(2, 2) + Element::y(2, 2)), ArgumentError);
}

TEST_CASE("elementary atoms need alpha != beta") {
  CHECK_THROWS_AS(Atom::elementary(1, CoordSet{1}, Element::one(1), MultiIndex{1}, MultiIndex{1}), ArgumentError);
  CHECK_THROWS_AS(
      Atom::elementary(2, CoordSet{1}, Element::x(2, 2) * Element::y(2, 2), MultiIndex{0}, MultiIndex{1}),
      ArgumentError);
}

TEST_CASE("finite units") {
  const Element e00 = idempotent(1, CoordSet{1});
  const Element e01 = matrix_unit(1, CoordSet{1}, MultiIndex{0}, MultiIndex{1});
  const Element u = Element::one(1) + e00 + e01;
  const Element w = invert_one_plus_F(u);
  CHECK(u * w == Element::one(1));
  CHECK(finite_determinant(u) == 2);
  CHECK_THROWS_AS(invert_one_plus_F(Element::one(1) - e00), NotAUnit);
  CHECK_THROWS_AS(finite_block(Element::x(1, 1)), MembershipError);
  CHECK_THROWS_AS(Atom::finite_unit(u, u), NotAUnit);
  const FiniteBlock b = finite_block(e00 + Scalar(3) * e01);
  CHECK(from_finite_block(1, b) == e00 + Scalar(3) * e01);
}
