#include "sn/factorization.hpp"

#include <string>

#include "sn/ideal.hpp"
#include "sn/laurent_matrix.hpp"

namespace sn {

namespace {

void check(bool ok, const std::string& step, const std::string& detail) {
  if (!ok) throw FactorizationError(step, detail);
}

}  // namespace

CorankOneFactorization factor_ann1(const Element& u, const Element& u_inv, Stabilization opts) {
  const int n = u.n();
  if (n < 2) throw ArgumentError("factor_ann1 needs n >= 2");
  const Element one = Element::one(n);
  check(u * u_inv == one && u_inv * u == one, "witness", "u_inv is not a two-sided inverse of u");
  check(ideal_member(u - one, IdealSpec::level_sum(n - 1)), "membership", "u - 1 is not in a_{n,n-1}");

  CorankOneFactorization out;
  const CoordSet full = CoordSet::full(n);
  out.theta_word.n = n;
  for (int j = 1; j < n; ++j) {
    int ind = 0;
    try {
      ind = ind_i_det(u, j);
    } catch (const NotMonomialUnit& e) {
      throw FactorizationError("indices", e.what());
    }
    out.exponents.push_back(-ind);
    if (ind != 0) out.theta_word.atoms.push_back(Atom::theta(n, full, n, j, -ind));
  }

  // Strip the theta part: w = T^{-1} u has every ind_i equal to 0.
  Element current = word_to_element(word_inverse(out.theta_word)) * u;
  Element current_inv = u_inv * word_to_element(out.theta_word);
  for (int j = 1; j <= n; ++j)
    check(ind_i_det(current, j) == 0, "theta-strip", "ind_" + std::to_string(j) + " is nonzero after stripping");

  for (int k = 1; k < n; ++k) {
    const std::vector<Element> parts = corank_one_components(current, k);
    std::vector<Element> corrected(static_cast<std::size_t>(n), one);
    for (int j = k; j <= n; ++j) {
      const Element base = one + parts[static_cast<std::size_t>(j - 1)];
      Element f(n);
      try {
        f = fredholm_correction(base, opts);
      } catch (const Error& e) {
        throw FactorizationError("correction-" + std::to_string(j), e.what());
      }
      corrected[static_cast<std::size_t>(j - 1)] = base + f;
    }
    const Element& uk = corrected[static_cast<std::size_t>(k - 1)];
    Element rest = one;
    for (int j = k + 1; j <= n; ++j) rest = rest * corrected[static_cast<std::size_t>(j - 1)];

    const std::string step = "peel-" + std::to_string(k);
    // uk * rest = (1 - g current^{-1}) current with g in F_n.
    const Element g = current - uk * rest;
    check(ideal_member(g, IdealSpec::matrix_ideal()), step,
          "defect of factor " + std::to_string(k) + " is not in F_n");
    Element fix_inv(n);
    try {
      fix_inv = invert_one_plus_F(one - g * current_inv);
    } catch (const NotAUnit& e) {
      throw FactorizationError(step, e.what());
    }
    const Element uk_inv = rest * current_inv * fix_inv;
    check(uk * uk_inv == one && uk_inv * uk == one, step,
          "factor " + std::to_string(k) + " did not invert");
    check(ideal_member(uk - one, IdealSpec::prime_set(CoordSet::single(k).complement(n))), step,
          "factor " + std::to_string(k) + " is not in 1 + p_{C" + std::to_string(k) + "}");
    out.factors.push_back(uk);
    out.factor_inverses.push_back(uk_inv);
    current = uk_inv * current;
    current_inv = current_inv * uk;
  }
  check(ideal_member(current - one, IdealSpec::prime_set(CoordSet::single(n).complement(n))), "remainder",
        "last factor is not in 1 + p_{C" + std::to_string(n) + "}");
  out.factors.push_back(current);
  out.factor_inverses.push_back(current_inv);

  Element rebuilt = word_to_element(out.theta_word);
  for (const auto& f : out.factors) rebuilt = rebuilt * f;
  check(rebuilt == u, "reassembly", "theta word times factors differs from u");
  return out;
}

}  // namespace sn
