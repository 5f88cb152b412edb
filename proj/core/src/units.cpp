#include "sn/units.hpp"

#include <algorithm>

#include "sn/mixed.hpp"

namespace sn {

namespace {

void require_supported_off(const Element& a, CoordSet I) {
  for (const auto& [m, q] : a.terms())
    for (int i : I.elements())
      if (m.alpha[i - 1] != 0 || m.beta[i - 1] != 0)
        throw ArgumentError("coefficient must not involve the coordinates of I");
}

void require_index_pair(CoordSet I, const MultiIndex& alpha, const MultiIndex& beta) {
  if (I.empty()) throw ArgumentError("elementary unit needs a nonempty I");
  if (alpha.size() != I.size() || beta.size() != I.size()) throw ArgumentError("index length differs from |I|");
  if (!alpha.nonnegative() || !beta.nonnegative()) throw ArgumentError("negative matrix unit index");
  if (alpha == beta) throw ArgumentError("elementary unit needs alpha != beta");
}

// Coefficient monomial x^g or y^g (coefficient 1) of a Mu payload.
bool is_pure_power(const Element& a) {
  if (a.size() != 1) return false;
  const auto& [m, q] = *a.terms().begin();
  return q == 1 && (m.alpha.is_zero() || m.beta.is_zero()) && m.degree() > 0;
}

}  // namespace

Element mu(CoordSet I, const Element& payload) {
  const int n = payload.n();
  if (!I.within(n)) throw ArgumentError("mu coordinates outside {1..n}");
  require_supported_off(payload, I);
  if (I.empty()) return payload;
  const Element e = idempotent(n, I);
  return payload * e + Element::one(n) - e;
}

Element theta(int n, CoordSet J, int i, int j) {
  if (J.size() < 2 || !J.within(n)) throw ArgumentError("theta needs |J| >= 2 inside {1..n}");
  if (i == j || !J.contains(i) || !J.contains(j)) throw ArgumentError("theta needs distinct i, j in J");
  return mu(J.without(i), Element::y(n, i)) * mu(J.without(j), Element::x(n, j));
}

Atom Atom::theta(int n, CoordSet J, int i, int j, int exponent) {
  if (J.size() < 2 || !J.within(n)) throw ArgumentError("theta needs |J| >= 2 inside {1..n}");
  if (i == j || !J.contains(i) || !J.contains(j)) throw ArgumentError("theta needs distinct i, j in J");
  Atom a;
  a.kind = Kind::Theta;
  a.set = J;
  a.i = i;
  a.j = j;
  a.payload = Element::one(n);
  a.exponent = exponent;
  return a;
}

Atom Atom::mu(int n, CoordSet I, const Element& payload, int exponent) {
  require_same_n(n, payload.n());
  if (!I.within(n)) throw ArgumentError("mu coordinates outside {1..n}");
  require_supported_off(payload, I);
  const bool scalar = payload.is_scalar() && !payload.is_zero();
  if (!scalar && !is_pure_power(payload)) throw ArgumentError("mu payload must be a nonzero scalar, x^g or y^g");
  if (!scalar && exponent < 0) throw NotAUnit("mu with a monomial payload has no two-sided inverse");
  Atom a;
  a.kind = Kind::Mu;
  a.set = I;
  a.payload = payload;
  a.exponent = exponent;
  return a;
}

Atom Atom::elementary_unchecked(int n, CoordSet I, const Element& coef, const MultiIndex& alpha,
                                const MultiIndex& beta, int exponent) {
  require_same_n(n, coef.n());
  if (!I.within(n)) throw ArgumentError("elementary coordinates outside {1..n}");
  require_index_pair(I, alpha, beta);
  require_supported_off(coef, I);
  Atom a;
  a.kind = Kind::Elementary;
  a.set = I;
  a.payload = coef;
  a.alpha = alpha;
  a.beta = beta;
  a.exponent = exponent;
  return a;
}

Atom Atom::elementary(int n, CoordSet I, const Element& coef, const MultiIndex& alpha, const MultiIndex& beta,
                      int exponent) {
  bool ok = coef.size() == 1;
  if (ok) {
    const auto& [m, q] = *coef.terms().begin();
    int vars = 0;
    for (int k = 0; k < n; ++k)
      if (m.alpha[k] != 0 || m.beta[k] != 0) ++vars;
    ok = vars == 0 || (vars == 1 && (m.alpha.is_zero() || m.beta.is_zero()));
  }
  if (!ok) throw ArgumentError("elementary coefficient must be c, c*x_k^t or c*y_k^t");
  return elementary_unchecked(n, I, coef, alpha, beta, exponent);
}

Atom Atom::finite_unit(const Element& u, const Element& u_inv, int exponent) {
  require_same_n(u.n(), u_inv.n());
  const Element one = Element::one(u.n());
  if (u * u_inv != one || u_inv * u != one) throw NotAUnit("finite unit witness does not invert u");
  Atom a;
  a.kind = Kind::FiniteUnit;
  a.payload = u;
  a.payload_inv = u_inv;
  a.exponent = exponent;
  return a;
}

bool Atom::invertible() const { return kind != Kind::Mu || payload.is_scalar(); }

Element atom_to_element(const Atom& a) {
  const int n = a.n();
  switch (a.kind) {
    case Atom::Kind::Theta:
      return a.exponent >= 0 ? pow(theta(n, a.set, a.i, a.j), a.exponent)
                             : pow(theta(n, a.set, a.j, a.i), -a.exponent);
    case Atom::Kind::Mu:
      if (a.payload.is_scalar()) return mu(a.set, Element::scalar(n, scalar_pow(a.payload.constant_term(), a.exponent)));
      if (a.exponent < 0) throw NotAUnit("mu with a monomial payload has no two-sided inverse");
      return mu(a.set, pow(a.payload, a.exponent));
    case Atom::Kind::Elementary:
      return Element::one(n) + Scalar(a.exponent) * (a.payload * matrix_unit(n, a.set, a.alpha, a.beta));
    case Atom::Kind::FiniteUnit:
      return a.exponent >= 0 ? pow(a.payload, a.exponent) : pow(a.payload_inv, -a.exponent);
  }
  return Element::one(n);
}

Atom atom_inverse(const Atom& a) {
  Atom r = a;
  switch (a.kind) {
    case Atom::Kind::Theta:
      std::swap(r.i, r.j);
      break;
    case Atom::Kind::Mu:
      if (!a.invertible()) throw NotAUnit("mu with a monomial payload has no two-sided inverse");
      r.payload = Element::scalar(a.n(), 1 / a.payload.constant_term());
      break;
    case Atom::Kind::Elementary:
      r.payload = -a.payload;
      break;
    case Atom::Kind::FiniteUnit:
      std::swap(r.payload, r.payload_inv);
      break;
  }
  return r;
}

Element word_to_element(const GeneratorWord& w) {
  Element r = Element::one(w.n);
  for (const auto& a : w.atoms) r = r * atom_to_element(a);
  return r;
}

GeneratorWord word_inverse(const GeneratorWord& w) {
  GeneratorWord r{w.n, {}};
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) r.atoms.push_back(atom_inverse(*it));
  return r;
}

FiniteBlock finite_block(const Element& d) {
  const int n = d.n();
  const CoordSet full = CoordSet::full(n);
  std::vector<std::pair<std::pair<MultiIndex, MultiIndex>, Scalar>> entries;
  std::vector<MultiIndex> idx;
  const MixedElement mixed = to_mixed(d);
  for (const auto& [key, q] : mixed.terms()) {
    if (key.etype() != full) throw MembershipError("element is not in F_n");
    MultiIndex a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = key.symbols[static_cast<std::size_t>(i)].a;
      b[i] = key.symbols[static_cast<std::size_t>(i)].b;
    }
    idx.push_back(a);
    idx.push_back(b);
    entries.push_back({{a, b}, q});
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  FiniteBlock block;
  block.indices = idx;
  block.matrix.assign(idx.size(), std::vector<Scalar>(idx.size(), Scalar(0)));
  auto pos = [&](const MultiIndex& m) {
    return static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), m) - idx.begin());
  };
  for (const auto& [ab, q] : entries) block.matrix[pos(ab.first)][pos(ab.second)] += q;
  return block;
}

Element from_finite_block(int n, const FiniteBlock& b) {
  Element r(n);
  const CoordSet full = CoordSet::full(n);
  for (std::size_t i = 0; i < b.indices.size(); ++i)
    for (std::size_t j = 0; j < b.indices.size(); ++j)
      if (b.matrix[i][j] != 0) r += b.matrix[i][j] * matrix_unit(n, full, b.indices[i], b.indices[j]);
  return r;
}

Element invert_one_plus_F(const Element& u) {
  const int n = u.n();
  FiniteBlock block = finite_block(u - Element::one(n));
  for (std::size_t i = 0; i < block.indices.size(); ++i) block.matrix[i][i] += 1;
  auto inv = inverse(block.matrix);
  if (!inv) throw NotAUnit("1 + F block is singular");
  for (std::size_t i = 0; i < block.indices.size(); ++i) (*inv)[i][i] -= 1;
  block.matrix = std::move(*inv);
  return Element::one(n) + from_finite_block(n, block);
}

Scalar finite_determinant(const Element& u) {
  FiniteBlock block = finite_block(u - Element::one(u.n()));
  for (std::size_t i = 0; i < block.indices.size(); ++i) block.matrix[i][i] += 1;
  return determinant(block.matrix);
}

}  // namespace sn
