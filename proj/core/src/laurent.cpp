#include "sn/laurent.hpp"

#include <algorithm>
#include <ostream>

#include "format_util.hpp"

namespace sn {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& k, const Scalar& q) {
  if (q == 0) return;
  auto [it, inserted] = terms.try_emplace(k, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

LaurentElement LaurentElement::constant(int n, CoordSet vars, const Scalar& q) {
  LaurentElement r(n, vars);
  r.add_term(MultiIndex(n), q);
  return r;
}

LaurentElement LaurentElement::monomial(int n, CoordSet vars, const MultiIndex& e, const Scalar& q) {
  LaurentElement r(n, vars);
  r.add_term(e, q);
  return r;
}

bool LaurentElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_zero() && terms_.begin()->second == 1;
}

void LaurentElement::add_term(const MultiIndex& e, const Scalar& q) {
  if (e.size() != n_) throw DimensionError(n_, e.size());
  for (int i = 0; i < n_; ++i)
    if (e[i] != 0 && !vars_.contains(i + 1)) throw ArgumentError("Laurent exponent outside the variable set");
  accumulate(terms_, e, q);
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement r = *this;
  for (auto& [e, q] : r.terms_) q = -q;
  return r;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  require_same_n(n_, o.n_);
  vars_ = vars_ | o.vars_;
  for (const auto& [e, q] : o.terms_) accumulate(terms_, e, q);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
  require_same_n(n_, o.n_);
  vars_ = vars_ | o.vars_;
  for (const auto& [e, q] : o.terms_) accumulate(terms_, e, -q);
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  require_same_n(a.n_, b.n_);
  LaurentElement r(a.n_, a.vars_ | b.vars_);
  for (const auto& [ea, qa] : a.terms_)
    for (const auto& [eb, qb] : b.terms_) accumulate(r.terms_, ea + eb, qa * qb);
  return r;
}

LaurentElement exact_divide(const LaurentElement& a, const LaurentElement& b) {
  if (b.is_zero()) throw ArgumentError("division by the zero Laurent polynomial");
  const int n = a.n();
  LaurentElement q(n, a.vars() | b.vars());
  if (a.is_zero()) return q;

  // Any exact quotient has its exponents inside this box (Newton polytopes add).
  MultiIndex lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    int amin = 0, amax = 0, bmin = 0, bmax = 0;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
      amin = first ? e[i] : std::min(amin, e[i]);
      amax = first ? e[i] : std::max(amax, e[i]);
      first = false;
    }
    first = true;
    for (const auto& [e, c] : b.terms()) {
      bmin = first ? e[i] : std::min(bmin, e[i]);
      bmax = first ? e[i] : std::max(bmax, e[i]);
      first = false;
    }
    lo[i] = amin - bmin;
    hi[i] = amax - bmax;
  }

  const auto& [blead, bcoef] = *b.terms().rbegin();
  LaurentElement rem = a;
  while (!rem.is_zero()) {
    const auto& [rlead, rcoef] = *rem.terms().rbegin();
    const MultiIndex e = rlead - blead;
    if (!lo.dominated_by(e) || !e.dominated_by(hi)) throw ArgumentError("Laurent division is not exact");
    const LaurentElement t = LaurentElement::monomial(n, q.vars(), e, rcoef / bcoef);
    q += t;
    rem -= t * b;
  }
  return q;
}

std::string to_string(const LaurentElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    std::string body;
    for (int i = 0; i < a.n(); ++i) {
      const int e = it->first[i];
      if (e == 0) continue;
      detail::join_factor(body, "x" + std::to_string(i + 1) + (e == 1 ? "" : "^" + std::to_string(e)));
    }
    detail::append_signed_term(out, it->second, body);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentElement& a) { return os << to_string(a); }

void PartialLaurent::add_term(const Monomial& m, const MultiIndex& e, const Scalar& q) {
  accumulate(terms_, Key{m, e}, q);
}

LaurentElement PartialLaurent::to_laurent() const {
  LaurentElement r(n_, vars_);
  for (const auto& [k, q] : terms_) {
    if (k.first.degree() != 0) throw ArgumentError("partial Laurent image still has S-coordinates");
    r.add_term(k.second, q);
  }
  return r;
}

PartialLaurent operator+(const PartialLaurent& a, const PartialLaurent& b) {
  require_same_n(a.n_, b.n_);
  PartialLaurent r = a;
  for (const auto& [k, q] : b.terms_) accumulate(r.terms_, k, q);
  return r;
}

PartialLaurent operator*(const PartialLaurent& a, const PartialLaurent& b) {
  require_same_n(a.n_, b.n_);
  if (a.vars_ != b.vars_) throw ArgumentError("partial Laurent images over different variable sets");
  PartialLaurent r(a.n_, a.vars_);
  for (const auto& [ka, qa] : a.terms_)
    for (const auto& [kb, qb] : b.terms_)
      accumulate(r.terms_, PartialLaurent::Key{monomial_mul(ka.first, kb.first), ka.second + kb.second}, qa * qb);
  return r;
}

PartialLaurent laurent_image(const Element& a, CoordSet vars) {
  const int n = a.n();
  if (!vars.within(n)) throw ArgumentError("Laurent variable set outside {1..n}");
  PartialLaurent r(n, vars);
  for (const auto& [m, q] : a.terms()) {
    Monomial rest = m;
    MultiIndex e(n);
    for (int i = 0; i < n; ++i) {
      if (!vars.contains(i + 1)) continue;
      e[i] = m.alpha[i] - m.beta[i];
      rest.alpha[i] = 0;
      rest.beta[i] = 0;
    }
    r.add_term(rest, e, q);
  }
  return r;
}

}  // namespace sn
