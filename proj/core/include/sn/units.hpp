#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sn/element.hpp"
#include "sn/linalg.hpp"

namespace sn {

/// mu_I(a) = a e_I + 1 - e_I for a in S_{CI}; mu_{empty}(a) = a.
Element mu(CoordSet I, const Element& payload);
/// theta_{ij}(J) = mu_{J\i}(y_i) mu_{J\j}(x_j).
Element theta(int n, CoordSet J, int i, int j);

/// One factor of a generator word, raised to an integer power.
struct Atom {
  enum class Kind { Theta, Mu, Elementary, FiniteUnit };
  Kind kind = Kind::Theta;
  CoordSet set;
  int i = 0;
  int j = 0;
  /// Mu payload, Elementary coefficient, or the FiniteUnit element.
  Element payload;
  /// FiniteUnit inverse witness.
  Element payload_inv;
  MultiIndex alpha;
  MultiIndex beta;
  int exponent = 1;

  static Atom theta(int n, CoordSet J, int i, int j, int exponent = 1);
  /// Payload must be a scalar, x^g or y^g supported on CI.
  static Atom mu(int n, CoordSet I, const Element& payload, int exponent = 1);
  /// 1 + a E_{alpha beta}(I) with a in {c, c x_k^t, c y_k^t}, k outside I, alpha != beta.
  static Atom elementary(int n, CoordSet I, const Element& a, const MultiIndex& alpha, const MultiIndex& beta,
                         int exponent = 1);
  /// Same as `elementary` for any a in S_{CI}; the inverse 1 - aE is still exact.
  static Atom elementary_unchecked(int n, CoordSet I, const Element& a, const MultiIndex& alpha,
                                   const MultiIndex& beta, int exponent = 1);
  static Atom finite_unit(const Element& u, const Element& u_inv, int exponent = 1);

  [[nodiscard]] int n() const { return payload.n(); }
  /// True unless this is a Mu atom with a monomial payload.
  [[nodiscard]] bool invertible() const;
};

Element atom_to_element(const Atom& a);
/// Throws NotAUnit for Mu atoms with a monomial payload.
Atom atom_inverse(const Atom& a);

struct GeneratorWord {
  int n = 0;
  std::vector<Atom> atoms;
};

Element word_to_element(const GeneratorWord& w);
GeneratorWord word_inverse(const GeneratorWord& w);

/// Writes d in F_n as a finite block over the multi-indices it touches.
struct FiniteBlock {
  std::vector<MultiIndex> indices;
  DenseMatrix matrix;
};
/// Throws MembershipError when d is outside F_n.
FiniteBlock finite_block(const Element& d);
Element from_finite_block(int n, const FiniteBlock& b);

/// Inverse of u with u - 1 in F_n; NotAUnit when Id + block is singular.
Element invert_one_plus_F(const Element& u);

/// det(Id + block of u - 1), u - 1 in F_n.
Scalar finite_determinant(const Element& u);

}  // namespace sn
