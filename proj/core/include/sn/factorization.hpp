#pragma once

#include <vector>

#include "sn/fredholm.hpp"
#include "sn/units.hpp"

namespace sn {

/// u = theta_{n,1}^{m_1} ... theta_{n,n-1}^{m_{n-1}} * u_1 ... u_n with
/// u_k - 1 in p_{C{k}}; every u_k carries its inverse.
struct CorankOneFactorization {
  std::vector<int> exponents;
  GeneratorWord theta_word;
  std::vector<Element> factors;
  std::vector<Element> factor_inverses;
};

/// Factors a unit u of 1 + a_{n,n-1} (n >= 2) given its inverse. Every
/// intermediate claim is checked; a failed check raises FactorizationError
/// naming the step.
CorankOneFactorization factor_ann1(const Element& u, const Element& u_inv, Stabilization opts = {});

}  // namespace sn
