#include "sn/action.hpp"

#include <ostream>

#include "format_util.hpp"

namespace sn {

PolyElement PolyElement::monomial(const MultiIndex& e, const Scalar& q) {
  PolyElement p(e.size());
  p.add_term(e, q);
  return p;
}

Scalar PolyElement::coefficient(const MultiIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void PolyElement::add_term(const MultiIndex& e, const Scalar& q) {
  if (e.size() != n_) throw DimensionError(n_, e.size());
  if (!e.nonnegative()) throw ArgumentError("negative exponent in a polynomial");
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  require_same_n(n_, o.n_);
  for (const auto& [e, q] : o.terms_) add_term(e, q);
  return *this;
}

PolyElement operator-(PolyElement a, const PolyElement& b) {
  require_same_n(a.n_, b.n_);
  for (const auto& [e, q] : b.terms_) a.add_term(e, -q);
  return a;
}

bool apply_monomial(const Monomial& m, const MultiIndex& g, MultiIndex& out) {
  if (!m.beta.dominated_by(g)) return false;
  out = m.alpha + g - m.beta;
  return true;
}

PolyElement apply(const Element& a, const MultiIndex& g) {
  require_same_n(a.n(), g.size());
  PolyElement r(a.n());
  MultiIndex e;
  for (const auto& [m, q] : a.terms())
    if (apply_monomial(m, g, e)) r.add_term(e, q);
  return r;
}

PolyElement apply(const Element& a, const PolyElement& p) {
  require_same_n(a.n(), p.n());
  PolyElement r(a.n());
  MultiIndex e;
  for (const auto& [g, c] : p.terms())
    for (const auto& [m, q] : a.terms())
      if (apply_monomial(m, g, e)) r.add_term(e, q * c);
  return r;
}

std::string to_string(const PolyElement& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, q] : p.terms()) {
    std::string body;
    for (int i = 0; i < p.n(); ++i) detail::join_factor(body, detail::power_text("x" + std::to_string(i + 1), e[i]));
    detail::append_signed_term(out, q, body);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyElement& p) { return os << to_string(p); }

}  // namespace sn
