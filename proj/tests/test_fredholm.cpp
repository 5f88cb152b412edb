#include <doctest.h>

#include "sn/fredholm.hpp"
#include "sn/ideal.hpp"
#include "sn/units.hpp"

using namespace sn;

namespace {

Element corner(int n, int i, bool y) {
  const Element one = Element::one(n);
  const Element v = y ? Element::y(n, i) : Element::x(n, i);
  return one + (v - one) * idempotent(n, CoordSet::single(i).complement(n));
}

}  // namespace

TEST_CASE("index of powers of x and y") {
  for (int i = 1; i <= 4; ++i) {
    const IndexReport rx = index(Element::x(1, 1, i));
    CHECK(rx.ker == 0);
    CHECK(rx.coker == i);
    CHECK(rx.index == -i);
    CHECK(index(Element::y(1, 1, i)).index == i);
  }
}

TEST_CASE("corner shifts have index +1 and -1") {
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) {
      CHECK(index(corner(n, i, true)).index == 1);
      CHECK(index(corner(n, i, false)).index == -1);
    }
}

TEST_CASE("kernel basis") {
  const KernelResult k = truncated_kernel(Element::y(1, 1, 2), {}, true);
  CHECK(k.dim == 2);
  REQUIRE(k.basis.size() == 2);
  for (const auto& p : k.basis) CHECK(apply(Element::y(1, 1, 2), p).is_zero());
}

TEST_CASE("the adjoint kernel only bounds the cokernel") {
  // a(1) = t^2 and a(t^k) = t^(k+2) + t^k: nothing in the image has a nonzero
  // coefficient at 1, and t is not reached, so the cokernel is span{1, t}.
  const Element a = Element::x(1, 1, 2) + Element::one(1) - idempotent(1, CoordSet{1});
  const IndexReport r = index(a);
  CHECK(r.ker == 0);
  CHECK(r.coker == 2);
  CHECK(r.index == -2);
  CHECK(kernel_dim(involution(a)) == 1);
}

TEST_CASE("cokernel by adjoint and by direct ranks agree on corners") {
  const Element b = corner(2, 1, false) * corner(2, 2, false);
  CHECK(direct_coker_dim(b) == kernel_dim(involution(b)));
}

TEST_CASE("a plateau longer than the default window is not mistaken for the limit") {
  const Element one = Element::one(1);
  const Element e00 = idempotent(1, CoordSet{1});
  const Element e02 = matrix_unit(1, CoordSet{1}, MultiIndex{0}, MultiIndex{2});
  const Element b = one - e00 + Scalar(1, 2) * e02;
  CHECK(index(b).index == 0);
  const IndexReport r = index(Element::x(1, 1, 3) * b);
  CHECK(r.ker == 1);
  CHECK(r.coker == 4);
  CHECK(r.index == -3);
}

TEST_CASE("elements outside the Fredholm range do not settle") {
  CHECK_THROWS_AS(index(Element::x(2, 1)), NotStabilized);
  CHECK_THROWS_AS(kernel_dim(idempotent(1, CoordSet{1})), NotStabilized);
  Stabilization bad;
  bad.window = 0;
  CHECK_THROWS_AS(kernel_dim(Element::one(1), bad), ArgumentError);
}

TEST_CASE("perturbation by F keeps the index") {
  const Element f = matrix_unit(2, CoordSet{1, 2}, MultiIndex{0, 1}, MultiIndex{2, 0});
  CHECK(perturb_invariance_check(corner(2, 1, true), f));
  CHECK_THROWS_AS(perturb_invariance_check(corner(2, 1, true), Element::x(2, 1)), MembershipError);
}

TEST_CASE("fredholm correction makes an index-zero operator bijective") {
  const Element a = Element::one(1) - idempotent(1, CoordSet{1});
  const Element f = fredholm_correction(a);
  CHECK(ideal_member(f, IdealSpec::matrix_ideal()));
  CHECK(to_string(a + f) == "1");
  const IndexReport r = index(a + f);
  CHECK(r.ker == 0);
  CHECK(r.coker == 0);
  CHECK_THROWS_AS(fredholm_correction(Element::y(1, 1)), ArgumentError);
}

TEST_CASE("componentwise indices of theta") {
  const Element t = theta(2, CoordSet{1, 2}, 1, 2);
  CHECK(ind_vector(t) == std::vector<int>{1, -1});
  CHECK(ind_i(t, 1) == 1);
  const Element t3 = theta(3, CoordSet{1, 2, 3}, 1, 2);
  CHECK(ind_vector(t3) == std::vector<int>{1, -1, 0});
}
