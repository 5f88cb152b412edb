#include "sn/sampling.hpp"

#include <array>

namespace sn {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Scalar Sampler::nonzero_scalar() {
  static const std::array<Scalar, 8> palette{Scalar(1), Scalar(-1), Scalar(2), Scalar(-2),
                                             Scalar(1, 2), Scalar(3), Scalar(-2, 3), Scalar(5, 4)};
  return palette[static_cast<std::size_t>(uniform(0, static_cast<int>(palette.size()) - 1))];
}

MultiIndex Sampler::multi_index(int n, int max_exp) {
  MultiIndex m(n);
  for (int i = 0; i < n; ++i) m[i] = uniform(0, max_exp);
  return m;
}

Monomial Sampler::monomial(int n, int max_exp) { return {multi_index(n, max_exp), multi_index(n, max_exp)}; }

Element Sampler::element(int n, int max_terms, int max_exp) {
  Element a(n);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) a.add_term(monomial(n, max_exp), nonzero_scalar());
  return a;
}

PolyElement Sampler::poly(int n, int max_terms, int max_exp) {
  PolyElement p(n);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) p.add_term(multi_index(n, max_exp), nonzero_scalar());
  return p;
}

Element Sampler::finite_element(int n, int max_terms, int max_index) {
  Element f(n);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    f += nonzero_scalar() * matrix_unit(n, CoordSet::full(n), multi_index(n, max_index), multi_index(n, max_index));
  return f;
}

CoordSet Sampler::subset_at_least(int n, int s) {
  for (;;) {
    CoordSet I;
    for (int i = 1; i <= n; ++i)
      if (coin()) I = I.with(i);
    if (I.size() >= s && !I.empty()) return I;
  }
}

Atom Sampler::elementary_atom(int n, CoordSet I) {
  Element coef = Element::scalar(n, nonzero_scalar());
  const std::vector<int> outside = I.complement(n).elements();
  if (!outside.empty() && uniform(0, 2) != 0) {
    const int k = outside[static_cast<std::size_t>(uniform(0, static_cast<int>(outside.size()) - 1))];
    const int t = uniform(1, 2);
    coef = coef * (coin() ? Element::x(n, k, t) : Element::y(n, k, t));
  }
  MultiIndex alpha = multi_index(I.size(), 2);
  MultiIndex beta = multi_index(I.size(), 2);
  while (beta == alpha) beta = multi_index(I.size(), 2);
  return Atom::elementary(n, I, coef, alpha, beta, coin() ? 1 : -1);
}

Atom Sampler::unit_atom(int n, int s) {
  const int kind = uniform(0, 2);
  if (kind == 0 && s + 1 <= n && s >= 1) {
    const std::vector<CoordSet> sets = subsets_of_size(n, s + 1);
    const CoordSet J = sets[static_cast<std::size_t>(uniform(0, static_cast<int>(sets.size()) - 1))];
    const std::vector<int> e = J.elements();
    const int i = e[static_cast<std::size_t>(uniform(0, static_cast<int>(e.size()) - 1))];
    int j = i;
    while (j == i) j = e[static_cast<std::size_t>(uniform(0, static_cast<int>(e.size()) - 1))];
    return Atom::theta(n, J, i, j, coin() ? 1 : -1);
  }
  const CoordSet I = subset_at_least(n, s);
  if (kind == 1) return Atom::mu(n, I, Element::scalar(n, nonzero_scalar()));
  return elementary_atom(n, I);
}

GeneratorWord Sampler::unit_word(int n, int s, int length) {
  GeneratorWord w{n, {}};
  for (int k = 0; k < length; ++k) w.atoms.push_back(unit_atom(n, s));
  return w;
}

Atom Sampler::corank_one_atom(int n) {
  const CoordSet full = CoordSet::full(n);
  const int kind = uniform(0, 3);
  if (kind == 0) return Atom::theta(n, full, n, uniform(1, n - 1), coin() ? 1 : -1);
  const CoordSet I = kind == 3 && coin() ? full : CoordSet::single(uniform(1, n)).complement(n);
  if (kind == 1) return Atom::mu(n, I, Element::scalar(n, nonzero_scalar()));
  return elementary_atom(n, I);
}

GeneratorWord Sampler::corank_one_word(int n, int length) {
  GeneratorWord w{n, {}};
  for (int k = 0; k < length; ++k) w.atoms.push_back(corank_one_atom(n));
  return w;
}

Automorphism Sampler::gn_generator(int n) {
  const int kind = uniform(n >= 2 ? 0 : 1, 2);
  if (kind == 0) {
    const int i = uniform(1, n);
    int j = i;
    while (j == i) j = uniform(1, n);
    return Automorphism::transposition(n, i, j);
  }
  if (kind == 1) {
    std::vector<Scalar> lambda;
    for (int i = 0; i < n; ++i) lambda.push_back(coin() ? Scalar(1) : nonzero_scalar());
    return Automorphism::torus(std::move(lambda));
  }
  const GeneratorWord w = unit_word(n, 1, uniform(1, 2));
  return Automorphism::inner(word_to_element(w), word_to_element(word_inverse(w)));
}

Automorphism Sampler::automorphism(int n, int length) {
  Automorphism a = Automorphism::identity(n);
  for (int k = 0; k < length; ++k) a = aut_compose(a, gn_generator(n));
  return a;
}

}  // namespace sn
