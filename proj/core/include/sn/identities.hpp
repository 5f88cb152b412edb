#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sn/element.hpp"

namespace sn {

/// [a, b] = a b a^{-1} b^{-1}, from explicit inverses.
Element commutator(const Element& a, const Element& a_inv, const Element& b, const Element& b_inv);

/// Outcome of one named family of exact identities.
struct IdentityCheck {
  IdentityCheck() = default;
  explicit IdentityCheck(std::string name) : id(std::move(name)) {}

  std::string id;
  int cases = 0;
  int failures = 0;
  /// First failing instance, empty when all passed.
  std::string detail;

  [[nodiscard]] bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& instance);
};

/// Exhaustive theta/mu relations over every J with 2 <= |J| <= max_size,
/// i != j in J and each lambda: ids tiji, tijjk, tmJ, tmJ1, meJij1..meJij4.
std::vector<IdentityCheck> commutator_identities_suite(int n, const std::vector<Scalar>& lambdas,
                                                       int max_size = -1);

}  // namespace sn
