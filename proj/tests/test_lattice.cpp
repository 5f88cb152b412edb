#include <doctest.h>

#include "sn/lattice.hpp"
#include "sn/sampling.hpp"
#include "sn/units.hpp"

using namespace sn;

TEST_CASE("psi' of theta") {
  const LatticeVector v = psi_prime(theta(3, CoordSet{1, 2, 3}, 1, 2), 2);
  CHECK(to_string(v) == "-(1,{2,3}) + (2,{1,3})");
  const LatticeVector w = psi_prime(theta(3, CoordSet{1, 3}, 3, 1), 1);
  LatticeVector expected;
  expected.add(3, CoordSet{1}, -1);
  expected.add(1, CoordSet{3}, 1);
  CHECK(w == expected);
}

TEST_CASE("chi vanishes on psi'") {
  Sampler rng(3);
  for (int t = 0; t < 10; ++t) {
    const Element u = word_to_element(rng.unit_word(3, 1, 2));
    const LatticeVector v = psi_prime(u, 1);
    for (CoordSet J : subsets_of_size(3, 2)) CHECK(chi(J, v) == 0);
  }
}

TEST_CASE("psi' is multiplicative") {
  const Element a = theta(2, CoordSet{1, 2}, 1, 2);
  const Element b = mu(CoordSet{1}, Element::x(2, 2)) * mu(CoordSet{2}, Element::scalar(2, 3));
  CHECK(psi_prime(a * a, 1) == psi_prime(a, 1) + psi_prime(a, 1));
  CHECK(psi_prime(a * b, 1) == psi_prime(a, 1) + psi_prime(b, 1));
}

TEST_CASE("lattice arithmetic") {
  LatticeVector v;
  v.add(1, CoordSet{2}, 3);
  v.add(1, CoordSet{2}, -3);
  CHECK(v.is_zero());
  CHECK(to_string(v) == "0");
  CHECK_THROWS_AS(v.add(1, CoordSet{1, 2}, 1), ArgumentError);
  CHECK_THROWS_AS(psi_prime(Element::one(2), 2), ArgumentError);
}
