#include <doctest.h>

#include "sn/factorization.hpp"
#include "sn/ideal.hpp"
#include "sn/sampling.hpp"

using namespace sn;

namespace {

Element reassemble(const CorankOneFactorization& f) {
  Element r = word_to_element(f.theta_word);
  for (const Element& u : f.factors) r = r * u;
  return r;
}

}  // namespace

TEST_CASE("a pure theta word is its own theta part") {
  const Element t = theta(2, CoordSet{1, 2}, 2, 1);
  const CorankOneFactorization f = factor_ann1(pow(t, 2), pow(theta(2, CoordSet{1, 2}, 1, 2), 2));
  CHECK(f.exponents == std::vector<int>{2});
  for (const Element& u : f.factors) CHECK(u == Element::one(2));
  CHECK(reassemble(f) == pow(t, 2));
}

TEST_CASE("random corank-one words reassemble") {
  Sampler rng(21);
  for (int n = 2; n <= 3; ++n)
    for (int t = 0; t < 8; ++t) {
      const GeneratorWord w = rng.corank_one_word(n, rng.uniform(1, 4));
      const Element u = word_to_element(w);
      const CorankOneFactorization f = factor_ann1(u, word_to_element(word_inverse(w)));
      CHECK(reassemble(f) == u);
      for (int k = 1; k <= n; ++k) {
        const Element& uk = f.factors[static_cast<std::size_t>(k - 1)];
        CHECK(uk * f.factor_inverses[static_cast<std::size_t>(k - 1)] == Element::one(n));
        CHECK(ideal_member(uk - Element::one(n), IdealSpec::prime_set(CoordSet::single(k).complement(n))));
      }
    }
}

TEST_CASE("a wrong witness names the failing step") {
  const Element t = theta(2, CoordSet{1, 2}, 2, 1);
  try {
    factor_ann1(t, t);
    FAIL("expected a FactorizationError");
  } catch (const FactorizationError& e) {
    CHECK(e.step() == "witness");
  }
  CHECK_THROWS_AS(factor_ann1(Element::one(1), Element::one(1)), ArgumentError);
}

TEST_CASE("units outside 1 + a_{n,n-1} are rejected") {
  const Element m = mu(CoordSet{1}, Element::scalar(3, 2));
  try {
    factor_ann1(m, mu(CoordSet{1}, Element::scalar(3, Scalar(1, 2))));
    FAIL("expected a FactorizationError");
  } catch (const FactorizationError& e) {
    CHECK(e.step() == "membership");
  }
}
