#include "sn/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sn/ideal.hpp"
#include "sn/lattice.hpp"
#include "sn/units.hpp"

namespace sn {

namespace {

void check_perm(const std::vector<int>& perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw ArgumentError("not a permutation of {1..n}");
}

std::vector<Scalar> ones(int n) { return std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(1)); }

std::vector<int> identity_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

}  // namespace

Automorphism Automorphism::identity(int n) {
  check_arity(n);
  return {n, identity_perm(n), ones(n), Element::one(n), Element::one(n)};
}

Automorphism Automorphism::make(std::vector<int> perm, std::vector<Scalar> lambda, Element u, Element u_inv) {
  const int n = u.n();
  require_same_n(n, u_inv.n());
  if (static_cast<int>(perm.size()) != n || static_cast<int>(lambda.size()) != n)
    throw ArgumentError("permutation and torus vector need length n");
  check_perm(perm);
  for (const auto& l : lambda)
    if (l == 0) throw ArgumentError("torus entries must be nonzero");
  const Element one = Element::one(n);
  if (!ideal_member(u - one, IdealSpec::level_sum(1))) throw MembershipError("u - 1 is not in a_n");
  if (u * u_inv != one || u_inv * u != one) throw NotAUnit("u_inv is not a two-sided inverse of u");
  return {n, std::move(perm), std::move(lambda), std::move(u), std::move(u_inv)};
}

Automorphism Automorphism::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw ArgumentError("transposition needs distinct i, j in {1..n}");
  std::vector<int> p = identity_perm(n);
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]);
  return permutation(std::move(p));
}

Automorphism Automorphism::permutation(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size());
  return make(std::move(perm), ones(n), Element::one(n), Element::one(n));
}

Automorphism Automorphism::torus(std::vector<Scalar> lambda) {
  const int n = static_cast<int>(lambda.size());
  return make(identity_perm(n), std::move(lambda), Element::one(n), Element::one(n));
}

Automorphism Automorphism::inner(const Element& u, const Element& u_inv) {
  const int n = u.n();
  return make(identity_perm(n), ones(n), u, u_inv);
}

Element torus_apply(const std::vector<Scalar>& lambda, const Element& a) {
  const int n = a.n();
  if (static_cast<int>(lambda.size()) != n) throw DimensionError(n, static_cast<int>(lambda.size()));
  Element::TermMap t;
  for (const auto& [m, q] : a.terms()) {
    Scalar c = q;
    for (int i = 0; i < n; ++i) c *= scalar_pow(lambda[static_cast<std::size_t>(i)], m.alpha[i] - m.beta[i]);
    t.emplace(m, c);
  }
  return Element(n, std::move(t));
}

Element permute_apply(const std::vector<int>& perm, const Element& a) {
  const int n = a.n();
  if (static_cast<int>(perm.size()) != n) throw DimensionError(n, static_cast<int>(perm.size()));
  Element::TermMap t;
  for (const auto& [m, q] : a.terms()) {
    Monomial r = Monomial::one(n);
    for (int i = 0; i < n; ++i) {
      const int to = perm[static_cast<std::size_t>(i)] - 1;
      r.alpha[to] = m.alpha[i];
      r.beta[to] = m.beta[i];
    }
    t.emplace(r, q);
  }
  return Element(n, std::move(t));
}

std::vector<int> perm_inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

int perm_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Element aut_apply(const Automorphism& sigma, const Element& a) {
  require_same_n(sigma.n, a.n());
  return permute_apply(sigma.perm, torus_apply(sigma.lambda, sigma.u * a * sigma.u_inv));
}

Automorphism aut_compose(const Automorphism& a, const Automorphism& b) {
  require_same_n(a.n, b.n);
  const int n = a.n;
  Automorphism r;
  r.n = n;
  r.perm.resize(static_cast<std::size_t>(n));
  r.lambda.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < r.perm.size(); ++i) {
    const auto bi = static_cast<std::size_t>(b.perm[i] - 1);
    r.perm[i] = a.perm[bi];
    r.lambda[i] = a.lambda[bi] * b.lambda[i];
  }
  std::vector<Scalar> inv_lambda;
  for (const auto& l : b.lambda) inv_lambda.push_back(1 / l);
  const std::vector<int> inv_perm = perm_inverse(b.perm);
  r.u = torus_apply(inv_lambda, permute_apply(inv_perm, a.u)) * b.u;
  r.u_inv = b.u_inv * torus_apply(inv_lambda, permute_apply(inv_perm, a.u_inv));
  return r;
}

Automorphism aut_invert(const Automorphism& sigma) {
  std::vector<Scalar> inv_lambda;
  for (const auto& l : sigma.lambda) inv_lambda.push_back(1 / l);
  const Automorphism w{sigma.n, identity_perm(sigma.n), ones(sigma.n), sigma.u_inv, sigma.u};
  const Automorphism t{sigma.n, identity_perm(sigma.n), inv_lambda, Element::one(sigma.n), Element::one(sigma.n)};
  const Automorphism s{sigma.n, perm_inverse(sigma.perm), ones(sigma.n), Element::one(sigma.n),
                       Element::one(sigma.n)};
  return aut_compose(w, aut_compose(t, s));
}

Automorphism aut_commutator(const Automorphism& a, const Automorphism& b) {
  return aut_compose(aut_compose(a, b), aut_compose(aut_invert(a), aut_invert(b)));
}

bool rigidity_equal(const Automorphism& a, const Automorphism& b) {
  require_same_n(a.n, b.n);
  for (int i = 1; i <= a.n; ++i)
    if (aut_apply(a, Element::x(a.n, i)) != aut_apply(b, Element::x(a.n, i))) return false;
  return true;
}

bool images_equal(const Automorphism& a, const Automorphism& b) {
  if (!rigidity_equal(a, b)) return false;
  for (int i = 1; i <= a.n; ++i)
    if (aut_apply(a, Element::y(a.n, i)) != aut_apply(b, Element::y(a.n, i))) return false;
  return true;
}

Scalar jacobian(const Automorphism& sigma) {
  Scalar r = perm_sign(sigma.perm);
  for (const auto& l : sigma.lambda) r *= l;
  return r;
}

int theta_parity(const Element& u) {
  if (u.n() != 2) throw UnsupportedError("theta parity is defined for n = 2");
  const long c = psi_prime(u, 1).coefficient(1, CoordSet{2});
  return static_cast<int>(((c % 2) + 2) % 2);
}

Scalar jacobian_exotic(const Automorphism& sigma) {
  if (sigma.n == 1) return sigma.lambda[0] * finite_determinant(sigma.u);
  if (sigma.n == 2) return (theta_parity(sigma.u) == 1 ? Scalar(-1) : Scalar(1)) * jacobian(sigma);
  throw UnsupportedError("exotic Jacobian exists only for n = 1, 2");
}

AbelianClass abelianization_class(const Automorphism& sigma) {
  AbelianClass c;
  c.n = sigma.n;
  c.sign = perm_sign(sigma.perm);
  for (const auto& l : sigma.lambda) c.torus_product *= l;
  if (sigma.n == 1) c.det = finite_determinant(sigma.u);
  if (sigma.n == 2) c.parity = theta_parity(sigma.u);
  return c;
}

AbelianClass class_product(const AbelianClass& a, const AbelianClass& b) {
  require_same_n(a.n, b.n);
  AbelianClass c;
  c.n = a.n;
  c.sign = a.sign * b.sign;
  c.torus_product = a.torus_product * b.torus_product;
  if (a.det && b.det) c.det = *a.det * *b.det;
  if (a.parity && b.parity) c.parity = (*a.parity + *b.parity) % 2;
  return c;
}

std::string to_string(const AbelianClass& c) {
  std::ostringstream os;
  if (c.n == 1) {
    os << "(" << format_scalar(c.torus_product) << ", " << format_scalar(c.det.value_or(1)) << ")";
    return os.str();
  }
  os << "(" << (c.sign < 0 ? "-1" : "+1") << ", " << format_scalar(c.torus_product);
  if (c.parity) os << ", " << *c.parity;
  os << ")";
  return os.str();
}

}  // namespace sn
