#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "sn/element.hpp"

namespace sn {

/// Polynomial in P_n = K[x_1..x_n], the module S_n acts on.
class PolyElement {
 public:
  using TermMap = std::map<MultiIndex, Scalar>;

  explicit PolyElement(int n = 0) : n_(n) {}
  static PolyElement monomial(const MultiIndex& e, const Scalar& q = 1);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Scalar coefficient(const MultiIndex& e) const;

  void add_term(const MultiIndex& e, const Scalar& q);

  PolyElement& operator+=(const PolyElement& o);
  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend PolyElement operator-(PolyElement a, const PolyElement& b);
  friend bool operator==(const PolyElement&, const PolyElement&) = default;

 private:
  int n_ = 0;
  TermMap terms_;
};

/// x^a y^b * x^g = x^{a + g - b} when g >= b, else 0.
bool apply_monomial(const Monomial& m, const MultiIndex& g, MultiIndex& out);

PolyElement apply(const Element& a, const PolyElement& p);
PolyElement apply(const Element& a, const MultiIndex& g);

std::string to_string(const PolyElement& p);
std::ostream& operator<<(std::ostream& os, const PolyElement& p);

}  // namespace sn
