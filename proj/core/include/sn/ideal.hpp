#pragma once

#include <string>
#include <vector>

#include "sn/element.hpp"
#include "sn/mixed.hpp"

namespace sn {

/// One of the ideals p_I (intersection of p_i, i in I), a_{n,s} (sum of p_I
/// over |I| = s) or F_n.
struct IdealSpec {
  enum class Kind { PrimeSet, LevelSum, MatrixIdeal };
  Kind kind = Kind::MatrixIdeal;
  CoordSet coords;
  int level = 0;

  static IdealSpec prime_set(CoordSet I);
  static IdealSpec level_sum(int s);
  static IdealSpec matrix_ideal() { return {}; }

  /// Throws ArgumentError when it does not describe an ideal of S_n.
  void validate(int n) const;
  /// Whether a mixed term of E-type `t` lies in the ideal.
  [[nodiscard]] bool admits(CoordSet t, int n) const;
};

std::string to_string(const IdealSpec& spec);

bool ideal_member(const Element& a, const IdealSpec& spec);

/// Splits u - 1, u - 1 in a_{n,n-1}, into a_1..a_n where a_k collects the mixed
/// terms of E-type C{k}; terms of full E-type go to a_{full_to}.
/// Throws MembershipError when u - 1 is outside a_{n,n-1}.
std::vector<Element> corank_one_components(const Element& u, int full_to = 1);

}  // namespace sn
