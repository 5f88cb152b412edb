#include "sn/element.hpp"

#include <algorithm>
#include <ostream>

#include "format_util.hpp"

namespace sn {

Monomial Monomial::make(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.size() != beta.size()) throw ArgumentError("monomial alpha/beta length mismatch");
  if (!alpha.nonnegative() || !beta.nonnegative()) throw ArgumentError("negative exponent in monomial");
  return {alpha, beta};
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  return a.beta <=> b.beta;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  require_same_n(a.n(), b.n());
  Monomial r = a;
  for (int i = 0; i < a.n(); ++i) {
    const int cancel = b.alpha[i] - a.beta[i];
    if (cancel >= 0) {
      r.alpha[i] += cancel;
      r.beta[i] = b.beta[i];
    } else {
      r.beta[i] = b.beta[i] - cancel;
    }
  }
  return r;
}

Element::Element(int n) : n_(n) { check_arity(n); }

Element::Element(int n, TermMap terms) : Element(n) {
  for (auto& [m, q] : terms) {
    if (m.n() != n) throw DimensionError(n, m.n());
    if (!m.alpha.nonnegative() || !m.beta.nonnegative()) throw ArgumentError("negative exponent in monomial");
    if (q != 0) terms_.emplace(m, q);
  }
}

Element Element::scalar(int n, const Scalar& q) {
  Element e(n);
  e.add_term(Monomial::one(n), q);
  return e;
}

Element Element::monomial(const Monomial& m, const Scalar& q) {
  Element e(m.n());
  e.add_term(Monomial::make(m.alpha, m.beta), q);
  return e;
}

Element Element::x(int n, int i, int power) {
  if (i < 1 || i > n) throw ArgumentError("variable index out of range");
  Monomial m = Monomial::one(n);
  m.alpha[i - 1] = power;
  return monomial(m);
}

Element Element::y(int n, int i, int power) {
  if (i < 1 || i > n) throw ArgumentError("variable index out of range");
  Monomial m = Monomial::one(n);
  m.beta[i - 1] = power;
  return monomial(m);
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool Element::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Element::support_degree() const {
  int d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m.degree());
  return d;
}

int Element::max_exponent() const {
  int d = 0;
  for (const auto& [m, q] : terms_) d = std::max({d, m.alpha.max_entry(), m.beta.max_entry()});
  return d;
}

void Element::add_term(const Monomial& m, const Scalar& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, q] : r.terms_) q = -q;
  return r;
}

Element& Element::operator+=(const Element& other) {
  require_same_n(n_, other.n_);
  for (const auto& [m, q] : other.terms_) add_term(m, q);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_n(n_, other.n_);
  for (const auto& [m, q] : other.terms_) add_term(m, -q);
  return *this;
}

Element& Element::operator*=(const Scalar& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  require_same_n(a.n_, b.n_);
  Element r(a.n_);
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(monomial_mul(ma, mb), qa * qb);
      if (!inserted) it->second += qa * qb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Element mul(const Element& a, const Element& b) { return a * b; }

Element pow(const Element& a, int k) {
  if (k < 0) throw ArgumentError("negative power of a general element");
  Element r = Element::one(a.n());
  Element base = a;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

Element involution(const Element& a) {
  Element::TermMap t;
  for (const auto& [m, q] : a.terms()) t.emplace(Monomial{m.beta, m.alpha}, q);
  return Element(a.n(), std::move(t));
}

Element matrix_unit(int n, CoordSet I, const MultiIndex& alpha, const MultiIndex& beta) {
  if (I.empty()) throw ArgumentError("matrix unit needs a nonempty coordinate set");
  if (!I.within(n)) throw ArgumentError("matrix unit coordinates outside {1..n}");
  const auto coords = I.elements();
  if (alpha.size() != static_cast<int>(coords.size()) || beta.size() != static_cast<int>(coords.size())) {
    throw ArgumentError("matrix unit index length differs from |I|");
  }
  if (!alpha.nonnegative() || !beta.nonnegative()) throw ArgumentError("negative matrix unit index");
  Element r = Element::one(n);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const int i = coords[k] - 1;
    Monomial lo = Monomial::one(n);
    lo.alpha[i] = alpha[static_cast<int>(k)];
    lo.beta[i] = beta[static_cast<int>(k)];
    Monomial hi = lo;
    hi.alpha[i] += 1;
    hi.beta[i] += 1;
    Element factor(n);
    factor.add_term(lo, 1);
    factor.add_term(hi, -1);
    r = r * factor;
  }
  return r;
}

Element idempotent(int n, CoordSet I) {
  if (I.empty()) return Element::one(n);
  return matrix_unit(n, I, MultiIndex(I.size()), MultiIndex(I.size()));
}

namespace {

std::int64_t count_bounded(int slots, int budget) {
  if (slots == 0) return 1;
  std::int64_t total = 0;
  for (int e = 0; e <= budget; ++e) total += count_bounded(slots - 1, budget - e);
  return total;
}

}  // namespace

std::int64_t filtration_dim(int n, int degree) {
  if (degree < 0) throw ArgumentError("filtration degree must be nonnegative");
  check_arity(n);
  return count_bounded(2 * n, degree);
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.n(); ++i) detail::join_factor(out, detail::power_text("x" + std::to_string(i + 1), m.alpha[i]));
  for (int i = 0; i < m.n(); ++i) detail::join_factor(out, detail::power_text("y" + std::to_string(i + 1), m.beta[i]));
  return out.empty() ? "1" : out;
}

std::string to_string(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, q] : a.terms()) detail::append_signed_term(out, q, m.degree() == 0 ? "" : to_string(m));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& a) { return os << to_string(a); }

}  // namespace sn
