#include "sn/laurent_matrix.hpp"

#include <algorithm>

#include "sn/ideal.hpp"
#include "sn/mixed.hpp"

namespace sn {

LaurentElement LaurentMatrix::entry(const Index& r, const Index& c) const {
  LaurentElement v(n_, set_.complement(n_));
  if (r == c) v = LaurentElement::constant(n_, set_.complement(n_), 1);
  auto it = offset_.find({r, c});
  if (it != offset_.end()) v += it->second;
  return v;
}

void LaurentMatrix::add_offset(const Index& r, const Index& c, const LaurentElement& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = offset_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) offset_.erase(it);
  }
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  require_same_n(a.n_, b.n_);
  if (a.set_ != b.set_) throw ArgumentError("matrix images over different index sets");
  // (Id + A)(Id + B) = Id + A + B + AB.
  LaurentMatrix r(a.n_, a.set_);
  for (const auto& [rc, v] : a.offset_) r.add_offset(rc.first, rc.second, v);
  for (const auto& [rc, v] : b.offset_) r.add_offset(rc.first, rc.second, v);
  std::map<LaurentMatrix::Index, std::vector<std::pair<LaurentMatrix::Index, const LaurentElement*>>> rows_of_b;
  for (const auto& [rc, v] : b.offset_) rows_of_b[rc.first].emplace_back(rc.second, &v);
  for (const auto& [rc, v] : a.offset_) {
    auto it = rows_of_b.find(rc.second);
    if (it == rows_of_b.end()) continue;
    for (const auto& [col, w] : it->second) r.add_offset(rc.first, col, v * *w);
  }
  return r;
}

LaurentMatrix matrix_image(const Element& u, CoordSet I) {
  const int n = u.n();
  if (I.empty() || !I.within(n)) throw ArgumentError("matrix image needs a nonempty I inside {1..n}");
  const Element d = u - Element::one(n);
  if (!ideal_member(d, IdealSpec::level_sum(I.size()))) throw MembershipError("u - 1 is not in a_{n,|I|}");
  const CoordSet rest = I.complement(n);
  const std::vector<int> coords = I.elements();
  LaurentMatrix m(n, I);
  const MixedElement mixed = to_mixed(d);
  for (const auto& [key, q] : mixed.terms()) {
    if (key.etype() != I) continue;
    MultiIndex r(I.size()), c(I.size()), e(n);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const MixedSymbol& s = key.symbols[static_cast<std::size_t>(coords[k] - 1)];
      r[static_cast<int>(k)] = s.a;
      c[static_cast<int>(k)] = s.b;
    }
    for (int i = 0; i < n; ++i) {
      const MixedSymbol& s = key.symbols[static_cast<std::size_t>(i)];
      if (s.kind == MixedSymbol::Kind::XPow) e[i] = s.a;
      if (s.kind == MixedSymbol::Kind::YPow) e[i] = -s.b;
    }
    m.add_offset(r, c, LaurentElement::monomial(n, rest, e, q));
  }
  return m;
}

LaurentUnit det_degree(const LaurentMatrix& m) {
  const int n = m.n();
  const CoordSet vars = m.set().complement(n);
  std::vector<MultiIndex> idx;
  for (const auto& [rc, v] : m.offset()) {
    idx.push_back(rc.first);
    idx.push_back(rc.second);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const std::size_t size = idx.size();
  std::vector<std::vector<LaurentElement>> a(size, std::vector<LaurentElement>(size));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) a[r][c] = m.entry(idx[r], idx[c]);

  bool negate = false;
  LaurentElement prev = LaurentElement::constant(n, vars, 1);
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t p = k;
    while (p < size && a[p][k].is_zero()) ++p;
    if (p == size) throw NotMonomialUnit("determinant is zero");
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < size; ++r) {
      for (std::size_t c = k + 1; c < size; ++c) a[r][c] = exact_divide(a[k][k] * a[r][c] - a[r][k] * a[k][c], prev);
      a[r][k] = LaurentElement(n, vars);
    }
    prev = a[k][k];
  }
  LaurentElement det = size == 0 ? LaurentElement::constant(n, vars, 1) : prev;
  if (negate) det = -det;
  if (det.size() != 1) throw NotMonomialUnit("determinant " + to_string(det) + " is not a Laurent monomial");
  return {det.terms().begin()->second, det.terms().begin()->first};
}

int ind_i_det(const Element& u, int i) {
  const int n = u.n();
  if (i < 1 || i > n) throw ArgumentError("coordinate out of range");
  if (n == 1) throw ArgumentError("ind_i needs n >= 2");
  const LaurentUnit d = det_degree(matrix_image(u, CoordSet::single(i).complement(n)));
  return -d.gamma[i - 1];
}

}  // namespace sn
