#pragma once

#include <random>
#include <vector>

#include "sn/action.hpp"
#include "sn/automorphism.hpp"
#include "sn/element.hpp"
#include "sn/units.hpp"

namespace sn {

/// Seeded samplers for property tests and benchmarks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// Small nonzero rational from a fixed palette.
  Scalar nonzero_scalar();
  MultiIndex multi_index(int n, int max_exp);
  Monomial monomial(int n, int max_exp);
  Element element(int n, int max_terms, int max_exp);
  PolyElement poly(int n, int max_terms, int max_exp);
  /// Random element of F_n with matrix indices <= max_index.
  Element finite_element(int n, int max_terms, int max_index);

  /// Unit atom with u - 1 in a_{n,s}: theta over |J| = s+1, mu_I(lambda) or an
  /// elementary unit with |I| >= s.
  Atom unit_atom(int n, int s);
  GeneratorWord unit_word(int n, int s, int length);
  /// Atom from theta_{n,j}({1..n}) or the factor sets (1 + p_{C{k}})*.
  Atom corank_one_atom(int n);
  GeneratorWord corank_one_word(int n, int length);

  /// Transposition, torus element, or an inner automorphism of a short unit word.
  Automorphism gn_generator(int n);
  Automorphism automorphism(int n, int length);

  std::mt19937_64& engine() { return rng_; }

 private:
  Atom elementary_atom(int n, CoordSet I);
  CoordSet subset_at_least(int n, int s);

  std::mt19937_64 rng_;
};

}  // namespace sn
