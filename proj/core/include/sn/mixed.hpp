#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sn/element.hpp"

namespace sn {

/// One tensor factor of the mixed basis: 1, x^a (a >= 1), y^b (b >= 1) or E_{ab}.
struct MixedSymbol {
  enum class Kind : std::uint8_t { Unit, XPow, YPow, MatUnit };
  Kind kind = Kind::Unit;
  int a = 0;
  int b = 0;

  static MixedSymbol unit() { return {}; }
  static MixedSymbol xpow(int a);
  static MixedSymbol ypow(int b);
  static MixedSymbol mat(int a, int b);

  friend bool operator==(const MixedSymbol&, const MixedSymbol&) = default;
  friend std::strong_ordering operator<=>(const MixedSymbol&, const MixedSymbol&) = default;
};

/// A mixed basis vector: one symbol per coordinate.
struct MixedKey {
  std::vector<MixedSymbol> symbols;

  [[nodiscard]] int n() const { return static_cast<int>(symbols.size()); }
  /// Coordinates carrying a matrix unit.
  [[nodiscard]] CoordSet etype() const;

  friend bool operator==(const MixedKey&, const MixedKey&) = default;
  /// Orders by |etype| first, then lexicographically by symbol.
  friend std::strong_ordering operator<=>(const MixedKey& a, const MixedKey& b);
};

class MixedElement {
 public:
  using TermMap = std::map<MixedKey, Scalar>;

  explicit MixedElement(int n = 0) : n_(n) {}

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(const MixedKey& k, const Scalar& q);

  /// Terms whose E-type set satisfies `keep`.
  [[nodiscard]] MixedElement filter(const std::function<bool(CoordSet)>& keep) const;

  friend bool operator==(const MixedElement&, const MixedElement&) = default;

 private:
  int n_ = 0;
  TermMap terms_;
};

/// Rewrites every x_i^a y_i^b by the telescoping formulas
///   a >= b: x^{a-b} - sum_{k<b} E_{k+a-b,k},   b > a: y^{b-a} - sum_{k<a} E_{k,k+b-a}.
MixedElement to_mixed(const Element& a);
Element from_mixed(const MixedElement& m);

/// Text form: "1 - E(0,0)" for n = 1, "x1*E2(0,1)" style otherwise.
std::string to_string(const MixedElement& m);
std::ostream& operator<<(std::ostream& os, const MixedElement& m);

}  // namespace sn
