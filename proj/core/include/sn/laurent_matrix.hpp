#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sn/laurent.hpp"

namespace sn {

/// Identity plus a finitely supported block, indexed by N^I, with entries in
/// the Laurent ring over CI.
class LaurentMatrix {
 public:
  using Index = MultiIndex;
  using Entries = std::map<std::pair<Index, Index>, LaurentElement>;

  LaurentMatrix() = default;
  LaurentMatrix(int n, CoordSet I) : n_(n), set_(I) {}

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] CoordSet set() const { return set_; }
  /// Entries of M - Id; absent entries are zero.
  [[nodiscard]] const Entries& offset() const { return offset_; }
  [[nodiscard]] LaurentElement entry(const Index& r, const Index& c) const;
  [[nodiscard]] bool is_identity() const { return offset_.empty(); }

  void add_offset(const Index& r, const Index& c, const LaurentElement& v);

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  int n_ = 0;
  CoordSet set_;
  Entries offset_;
};

/// Image of u in the quotient by a_{n,s+1}, |I| = s: mixed terms of u - 1 of
/// E-type exactly I, read as matrix entries over L_{CI}.
LaurentMatrix matrix_image(const Element& u, CoordSet I);

/// lambda * x^gamma.
struct LaurentUnit {
  Scalar lambda = 1;
  MultiIndex gamma;
};

/// Determinant by fraction-free elimination. NotMonomialUnit unless it is a
/// single Laurent monomial.
LaurentUnit det_degree(const LaurentMatrix& m);

/// -deg_{x_i} det(matrix_image(u, C{i})).
int ind_i_det(const Element& u, int i);

}  // namespace sn
