#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "sn/element.hpp"

namespace sn {

/// Laurent polynomial in the variables x_i, i in V. Exponent vectors have full
/// length n and are zero outside V.
class LaurentElement {
 public:
  using TermMap = std::map<MultiIndex, Scalar>;

  LaurentElement() = default;
  LaurentElement(int n, CoordSet vars) : n_(n), vars_(vars) {}

  static LaurentElement constant(int n, CoordSet vars, const Scalar& q);
  static LaurentElement monomial(int n, CoordSet vars, const MultiIndex& e, const Scalar& q = 1);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] CoordSet vars() const { return vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  void add_term(const MultiIndex& e, const Scalar& q);

  LaurentElement operator-() const;
  LaurentElement& operator+=(const LaurentElement& o);
  LaurentElement& operator-=(const LaurentElement& o);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

 private:
  int n_ = 0;
  CoordSet vars_;
  TermMap terms_;
};

/// Exact quotient a / b. Throws ArgumentError when b is zero or does not divide a.
LaurentElement exact_divide(const LaurentElement& a, const LaurentElement& b);

std::string to_string(const LaurentElement& a);
std::ostream& operator<<(std::ostream& os, const LaurentElement& a);

/// Element of S_{CV} (x) L_V: a monomial of S_n with zero exponents on V,
/// paired with a Laurent exponent supported on V.
class PartialLaurent {
 public:
  using Key = std::pair<Monomial, MultiIndex>;
  using TermMap = std::map<Key, Scalar>;

  PartialLaurent() = default;
  PartialLaurent(int n, CoordSet vars) : n_(n), vars_(vars) {}

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] CoordSet vars() const { return vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const MultiIndex& e, const Scalar& q);

  /// Only meaningful when V = {1..n}.
  [[nodiscard]] LaurentElement to_laurent() const;

  friend PartialLaurent operator+(const PartialLaurent& a, const PartialLaurent& b);
  friend PartialLaurent operator*(const PartialLaurent& a, const PartialLaurent& b);
  friend bool operator==(const PartialLaurent&, const PartialLaurent&) = default;

 private:
  int n_ = 0;
  CoordSet vars_;
  TermMap terms_;
};

/// x_i^a y_i^b -> x_i^{a-b} for i in V, identity elsewhere.
PartialLaurent laurent_image(const Element& a, CoordSet vars);

}  // namespace sn
