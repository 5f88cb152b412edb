#pragma once

#include <string>
#include <vector>

#include "sn/scalar.hpp"

namespace snc {

/// Expression tree of the sn-calc grammar. Parentheses leave no node; the
/// printer re-inserts them where nesting requires.
struct Ast {
  enum class Kind { Rational, Var, MatUnit, Mu, Theta, Elem, Sum, Product, Power };

  Kind kind = Kind::Rational;
  sn::Scalar value = 0;
  char var = 'x';
  int index = 0;
  std::vector<int> set;
  std::vector<int> alpha;
  std::vector<int> beta;
  int i = 0;
  int j = 0;
  int exponent = 1;
  /// Sum terms, Product factors, Power base, Mu payload or Elem coefficient.
  std::vector<Ast> children;
  /// Per Sum term: subtracted or added.
  std::vector<bool> negated;

  static Ast rational(const sn::Scalar& q);
  static Ast variable(char v, int index);
  static Ast mat_unit(std::vector<int> set, std::vector<int> alpha, std::vector<int> beta);
  static Ast mu(std::vector<int> set, Ast payload);
  static Ast theta(std::vector<int> set, int i, int j);
  static Ast elem(std::vector<int> set, Ast coef, std::vector<int> alpha, std::vector<int> beta);
  static Ast sum(std::vector<Ast> terms, std::vector<bool> negated);
  static Ast product(std::vector<Ast> factors);
  static Ast power(Ast base, int exponent);

  friend bool operator==(const Ast& a, const Ast& b);
};

/// Text that parses back to the same tree.
std::string to_text(const Ast& a);

}  // namespace snc
