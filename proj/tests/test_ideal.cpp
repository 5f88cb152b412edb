#include <doctest.h>

#include "sn/ideal.hpp"
#include "sn/units.hpp"

using namespace sn;

TEST_CASE("prime ideals contain matrix units of their coordinates") {
  const Element e1 = idempotent(2, CoordSet{1});
  CHECK(ideal_member(e1, IdealSpec::prime_set(CoordSet{1})));
  CHECK_FALSE(ideal_member(e1, IdealSpec::prime_set(CoordSet{2})));
  CHECK_FALSE(ideal_member(e1, IdealSpec::prime_set(CoordSet{1, 2})));
  CHECK(ideal_member(e1 * Element::x(2, 2), IdealSpec::prime_set(CoordSet{1})));
  CHECK_FALSE(ideal_member(Element::x(2, 1), IdealSpec::prime_set(CoordSet{1})));
  CHECK(ideal_member(Element(2), IdealSpec::matrix_ideal()));
}

TEST_CASE("level sums and F") {
  const Element e12 = idempotent(3, CoordSet{1, 2});
  CHECK(ideal_member(e12, IdealSpec::level_sum(2)));
  CHECK(ideal_member(e12, IdealSpec::level_sum(1)));
  CHECK_FALSE(ideal_member(e12, IdealSpec::level_sum(3)));
  CHECK_FALSE(ideal_member(e12, IdealSpec::matrix_ideal()));
  CHECK(ideal_member(idempotent(3, CoordSet{1, 2, 3}), IdealSpec::matrix_ideal()));
  CHECK(ideal_member(theta(3, CoordSet{1, 2, 3}, 1, 2) - Element::one(3), IdealSpec::level_sum(2)));
  CHECK_FALSE(ideal_member(theta(3, CoordSet{1, 2}, 1, 2) - Element::one(3), IdealSpec::level_sum(2)));
}

TEST_CASE("spec validation and text") {
  CHECK_THROWS_AS(IdealSpec::level_sum(4).validate(3), ArgumentError);
  CHECK_THROWS_AS(IdealSpec::prime_set(CoordSet{}).validate(2), ArgumentError);
  CHECK(to_string(IdealSpec::prime_set(CoordSet{1, 3})) == "p:{1,3}");
  CHECK(to_string(IdealSpec::level_sum(2)) == "a:2");
  CHECK(to_string(IdealSpec::matrix_ideal()) == "F");
}

TEST_CASE("corank one components") {
  const Element t = theta(2, CoordSet{1, 2}, 1, 2);
  const std::vector<Element> parts = corank_one_components(t);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] + parts[1] == t - Element::one(2));
  CHECK(ideal_member(parts[0], IdealSpec::prime_set(CoordSet{2})));
  CHECK_THROWS_AS(corank_one_components(Element::x(2, 1)), MembershipError);
}
