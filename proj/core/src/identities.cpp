#include "sn/identities.hpp"

#include <algorithm>
#include <sstream>

#include "sn/units.hpp"

namespace sn {

Element commutator(const Element& a, const Element& a_inv, const Element& b, const Element& b_inv) {
  return a * b * a_inv * b_inv;
}

void IdentityCheck::record(bool ok, const std::string& instance) {
  ++cases;
  if (ok) return;
  if (failures++ == 0) detail = instance;
}

std::vector<IdentityCheck> commutator_identities_suite(int n, const std::vector<Scalar>& lambdas, int max_size) {
  check_arity(n);
  if (max_size < 0) max_size = n;
  IdentityCheck tiji{"tiji"}, tijjk{"tijjk"}, tm{"tmJ"}, tm1{"tmJ1"};
  IdentityCheck me1{"meJij1"}, me2{"meJij2"}, me3{"meJij3"}, me4{"meJij4"};
  const Element one = Element::one(n);
  for (int size = 2; size <= std::min(max_size, n); ++size) {
    for (CoordSet J : subsets_of_size(n, size)) {
      const Element eJ = idempotent(n, J);
      for (int i : J.elements()) {
        for (int j : J.elements()) {
          if (i == j) continue;
          std::ostringstream tag;
          tag << "J=" << J << " i=" << i << " j=" << j;
          const Element t = theta(n, J, i, j);
          const Element t_inv = theta(n, J, j, i);
          tiji.record(t * t_inv == one && t_inv * t == one, tag.str());
          for (int k : J.elements()) {
            if (k == i || k == j) continue;
            tijjk.record(t * theta(n, J, j, k) == theta(n, J, i, k), tag.str() + " k=" + std::to_string(k));
          }
          const CoordSet Ji = J.without(i);
          const CoordSet Jj = J.without(j);
          const Element eJj = idempotent(n, Jj);
          const Element my = mu(Ji, Element::y(n, i));
          const Element mx = mu(Ji, Element::x(n, i));
          me1.record(my * eJj == eJj - eJ && eJj * mx == eJj - eJ, tag.str());
          me2.record((my * eJ).is_zero() && (eJ * mx).is_zero(), tag.str());
          me3.record(mu(Jj, Element::x(n, j) * Element::y(n, j)) == one - eJ, tag.str());
          for (const Scalar& lambda : lambdas) {
            const std::string inst = tag.str() + " lambda=" + format_scalar(lambda);
            const Element ml = mu(Jj, Element::scalar(n, lambda));
            const Element ml_inv = mu(Jj, Element::scalar(n, 1 / lambda));
            me4.record(eJ * ml == lambda * eJ && ml * eJ == lambda * eJ, inst);
            tm.record(commutator(t, t_inv, ml, ml_inv) == mu(J, Element::scalar(n, 1 / lambda)), inst);
            tm1.record(commutator(ml, ml_inv, t, t_inv) == mu(J, Element::scalar(n, lambda)), inst);
          }
        }
      }
    }
  }
  return {tiji, tijjk, tm, tm1, me1, me2, me3, me4};
}

}  // namespace sn
