#include <doctest.h>

#include "sn/mixed.hpp"
#include "sn/sampling.hpp"

using namespace sn;

TEST_CASE("xy = 1 - E00 in the mixed basis") {
  const Element xy = Element::x(1, 1) * Element::y(1, 1);
  CHECK(to_string(to_mixed(xy)) == "1 - E(0,0)");
}

TEST_CASE("telescoping formulas") {
  // x^2 y^3 = y - E_{01} - E_{12}
  const Element a = Element::x(1, 1, 2) * Element::y(1, 1, 3);
  const MixedElement m = to_mixed(a);
  CHECK(m.terms().size() == 3);
  CHECK(to_string(m) == "y1 - E(0,1) - E(1,2)");
  // x^3 y = x^2 - E_{20}
  CHECK(to_string(to_mixed(Element::x(1, 1, 3) * Element::y(1, 1))) == "x1^2 - E(2,0)");
}

TEST_CASE("E-types in two variables") {
  const Element a = Element::x(2, 1) * Element::y(2, 1) * Element::x(2, 2);
  const MixedElement m = to_mixed(a);
  int with_e = 0;
  for (const auto& [k, q] : m.terms())
    if (!k.etype().empty()) {
      ++with_e;
      CHECK(k.etype() == CoordSet{1});
    }
  CHECK(with_e == 1);
  CHECK(to_string(m) == "x2 - E1(0,0)*x2");
}

TEST_CASE("round trip on random elements") {
  Sampler rng(11);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 40; ++t) {
      const Element a = rng.element(n, 5, 4);
      CHECK(from_mixed(to_mixed(a)) == a);
    }
}

TEST_CASE("filter keeps terms by E-type") {
  const Element a = Element::x(2, 1) * Element::y(2, 1) + Element::y(2, 2);
  const MixedElement m = to_mixed(a);
  const MixedElement f = m.filter([](CoordSet t) { return t.empty(); });
  CHECK(to_string(f) == "1 + y2");
}
