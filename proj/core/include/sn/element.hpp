#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "sn/multi_index.hpp"
#include "sn/scalar.hpp"

namespace sn {

/// Basis monomial x^alpha y^beta of S_n (all x's to the left).
struct Monomial {
  MultiIndex alpha;
  MultiIndex beta;

  static Monomial one(int n) { return {MultiIndex(n), MultiIndex(n)}; }
  /// Validates lengths and nonnegativity.
  static Monomial make(const MultiIndex& alpha, const MultiIndex& beta);

  [[nodiscard]] int n() const { return alpha.size(); }
  [[nodiscard]] int degree() const { return alpha.total() + beta.total(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Degree-lexicographic on the concatenation (alpha, beta).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/// Product of two basis monomials: cancel y_i^b x_i^c coordinatewise, giving
/// x^{alpha + (gamma - beta)_+} y^{delta + (beta - gamma)_+}.
Monomial monomial_mul(const Monomial& a, const Monomial& b);

/// An element of S_n in the monomial basis. The term map never stores a zero
/// coefficient, so the zero element is the empty map.
class Element {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  explicit Element(int n = 0);
  Element(int n, TermMap terms);

  static Element zero(int n) { return Element(n); }
  static Element one(int n) { return scalar(n, 1); }
  static Element scalar(int n, const Scalar& q);
  static Element monomial(const Monomial& m, const Scalar& q = 1);
  static Element x(int n, int i, int power = 1);
  static Element y(int n, int i, int power = 1);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Scalar coefficient(const Monomial& m) const;
  /// True when the element lies in K (including zero).
  [[nodiscard]] bool is_scalar() const;
  [[nodiscard]] Scalar constant_term() const { return coefficient(Monomial::one(n_)); }
  /// Largest |alpha| + |beta| over the support (0 for the zero element).
  [[nodiscard]] int support_degree() const;
  /// Largest single exponent over the support.
  [[nodiscard]] int max_exponent() const;

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& q);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& q, Element a) { return a *= q; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) = default;

  /// Adds q * m in place (used by builders; keeps the no-zero invariant).
  void add_term(const Monomial& m, const Scalar& q);

 private:
  int n_ = 0;
  TermMap terms_;
};

Element mul(const Element& a, const Element& b);
Element pow(const Element& a, int k);

/// The anti-automorphism x_i <-> y_i; sends x^a y^b to x^b y^a.
Element involution(const Element& a);

/// E_{alpha beta}(I) = prod_{i in I} (x_i^{a_i} y_i^{b_i} - x_i^{a_i+1} y_i^{b_i+1}),
/// expanded into 2^{|I|} monomials. alpha and beta are indexed by the sorted
/// elements of I.
Element matrix_unit(int n, CoordSet I, const MultiIndex& alpha, const MultiIndex& beta);

/// e_I = E_{00}(I); e_{empty} = 1.
Element idempotent(int n, CoordSet I);

/// Number of basis monomials x^a y^b with |a| + |b| <= degree, by enumeration.
std::int64_t filtration_dim(int n, int degree);

/// Monomial as "x1^2*y1" ("1" for the unit).
std::string to_string(const Monomial& m);
/// Canonical text, terms in canonical order: "1 - x1*y1", "1/2*x2 + y1^3".
std::string to_string(const Element& a);
std::ostream& operator<<(std::ostream& os, const Element& a);

}  // namespace sn
