#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sn/element.hpp"

namespace sn {

/// sigma = s * t_lambda * omega_u: conjugate by u first, then scale by the
/// torus, then permute coordinates. `perm[i-1]` is s(i).
struct Automorphism {
  int n = 0;
  std::vector<int> perm;
  std::vector<Scalar> lambda;
  Element u;
  Element u_inv;

  static Automorphism identity(int n);
  /// Checks the permutation, nonzero torus entries, u - 1 in a_n and the witness.
  static Automorphism make(std::vector<int> perm, std::vector<Scalar> lambda, Element u, Element u_inv);
  static Automorphism transposition(int n, int i, int j);
  static Automorphism permutation(std::vector<int> perm);
  static Automorphism torus(std::vector<Scalar> lambda);
  static Automorphism inner(const Element& u, const Element& u_inv);
};

/// x^a y^b -> lambda^{a-b} x^a y^b.
Element torus_apply(const std::vector<Scalar>& lambda, const Element& a);
/// x_i -> x_{s(i)}, y_i -> y_{s(i)}.
Element permute_apply(const std::vector<int>& perm, const Element& a);
std::vector<int> perm_inverse(const std::vector<int>& perm);
int perm_sign(const std::vector<int>& perm);

Element aut_apply(const Automorphism& sigma, const Element& a);
/// (s1, l1, u1)(s2, l2, u2) = (s1 s2, (l1 o s2) l2, (t_{l2}^{-1} s2^{-1})(u1) u2).
Automorphism aut_compose(const Automorphism& a, const Automorphism& b);
Automorphism aut_invert(const Automorphism& sigma);
/// [a, b] = a b a^{-1} b^{-1}.
Automorphism aut_commutator(const Automorphism& a, const Automorphism& b);

/// Agreement on x_1..x_n, which determines an automorphism.
bool rigidity_equal(const Automorphism& a, const Automorphism& b);
/// Agreement on x_i and y_i for every i.
bool images_equal(const Automorphism& a, const Automorphism& b);

/// sign(s) * prod lambda_i.
Scalar jacobian(const Automorphism& sigma);

/// Coefficient of (1,{2}) in psi'(u, 1) reduced mod 2 (n = 2 only).
int theta_parity(const Element& u);

/// n = 1: lambda * det(u); n = 2: (-1)^parity sign(s) lambda_1 lambda_2.
/// UnsupportedError for n > 2.
Scalar jacobian_exotic(const Automorphism& sigma);

/// Image in G_n / [G_n, G_n].
struct AbelianClass {
  int n = 0;
  int sign = 1;
  Scalar torus_product = 1;
  /// n = 1: det(u).
  std::optional<Scalar> det;
  /// n = 2: theta parity.
  std::optional<int> parity;

  friend bool operator==(const AbelianClass&, const AbelianClass&) = default;
};

AbelianClass abelianization_class(const Automorphism& sigma);
/// Group law of the abelianization (sign and parity add mod 2).
AbelianClass class_product(const AbelianClass& a, const AbelianClass& b);
std::string to_string(const AbelianClass& c);

}  // namespace sn
