#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "sn/element.hpp"

namespace sn {

/// Finitely supported integer combination of the symbols (j, I), j not in I.
class LatticeVector {
 public:
  using Key = std::pair<int, CoordSet>;
  using TermMap = std::map<Key, long>;

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] long coefficient(int j, CoordSet I) const;

  void add(int j, CoordSet I, long c);

  LatticeVector& operator+=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(const LatticeVector& a);
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  TermMap terms_;
};

std::string to_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// Sum over |I| = s and j in CI of gamma_{I,j} (j, I), where lambda x^gamma is
/// det(matrix_image(u, I)). u - 1 must lie in a_{n,s}.
LatticeVector psi_prime(const Element& u, int s);

/// Sum of the coordinates n_{j,I} with {j} u I = J.
long chi(CoordSet J, const LatticeVector& v);

}  // namespace sn
