#include <doctest.h>

#include "sn/sampling.hpp"
#include "sn/serialize.hpp"

using namespace sn;

TEST_CASE("element JSON round trip and layout") {
  const Element a = Scalar(-1, 2) * Element::x(2, 1) * Element::y(2, 2) + Element::one(2);
  const Json j = to_json(a);
  CHECK(j.dump() ==
        R"({"n":2,"terms":[{"alpha":[0,0],"beta":[0,0],"coeff":"1"},{"alpha":[1,0],"beta":[0,1],"coeff":"-1/2"}]})");
  CHECK(element_from_json(j) == a);
  Sampler rng(4);
  for (int t = 0; t < 20; ++t) {
    const Element b = rng.element(3, 4, 3);
    CHECK(element_from_json(Json::parse(to_json(b).dump())) == b);
  }
}

TEST_CASE("malformed element JSON") {
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":1})")), ArgumentError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":1,"terms":[{"alpha":[0,0],"beta":[0],"coeff":"1"}]})")),
                  ArgumentError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":1,"terms":[{"alpha":[0],"beta":[0],"coeff":"1/0"}]})")),
                  ArgumentError);
}

TEST_CASE("automorphism JSON round trip") {
  Sampler rng(6);
  for (int n = 1; n <= 3; ++n) {
    const Automorphism a = rng.automorphism(n, 3);
    const Automorphism b = automorphism_from_json(Json::parse(to_json(a).dump()));
    CHECK(b.perm == a.perm);
    CHECK(b.lambda == a.lambda);
    CHECK(b.u == a.u);
    CHECK(b.u_inv == a.u_inv);
  }
}

TEST_CASE("lattice and index JSON") {
  LatticeVector v;
  v.add(2, CoordSet{1}, -3);
  CHECK(to_json(v).dump() == R"([{"j":2,"I":[1],"n":-3}])");
  CHECK(lattice_from_json(to_json(v)) == v);
  IndexReport r;
  r.ker = 1;
  r.index = 1;
  r.stabilized_at = 4;
  CHECK(to_json(r).dump() == R"({"ker":1,"coker":0,"index":1,"stabilized_at":4})");
}
