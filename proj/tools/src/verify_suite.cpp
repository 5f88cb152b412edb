#include "snc/verify_suite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sn/sn.hpp"

namespace snc {

using sn::Automorphism;
using sn::CoordSet;
using sn::Element;
using sn::IdentityCheck;
using sn::MultiIndex;
using sn::Sampler;
using sn::Scalar;

namespace {

std::vector<MultiIndex> box(int size, int max) {
  std::vector<MultiIndex> out;
  MultiIndex m(size);
  for (;;) {
    out.push_back(m);
    int k = 0;
    while (k < size && m[k] == max) m[k++] = 0;
    if (k == size) return out;
    ++m[k];
  }
}

std::string text(const MultiIndex& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string text(CoordSet s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

Element full_unit(int n, const MultiIndex& a, const MultiIndex& b) {
  return sn::matrix_unit(n, CoordSet::full(n), a, b);
}

/// binomial(top, k) by the multiplicative formula.
std::int64_t binomial(int top, int k) {
  std::int64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * (top - k + t) / t;
  return r;
}

Automorphism inner_theta(int n, CoordSet J, int i, int j) {
  return Automorphism::inner(sn::theta(n, J, i, j), sn::theta(n, J, j, i));
}

Automorphism conj(const Automorphism& g, const Automorphism& h) {
  return sn::aut_compose(sn::aut_compose(g, h), sn::aut_invert(g));
}

/// 1 + (y_i - 1) e_{C{i}} (index 1) or 1 + (x_i - 1) e_{C{i}} (index -1).
Element corner_shift(int n, int i, bool y) {
  const Element one = Element::one(n);
  const Element v = y ? Element::y(n, i) : Element::x(n, i);
  return one + (v - one) * sn::idempotent(n, CoordSet::single(i).complement(n));
}

/// Fredholm factor with an index known in closed form.
std::pair<Element, int> fredholm_factor(int n, Sampler& rng) {
  const Element one = Element::one(n);
  const int kind = rng.uniform(0, 3);
  if (kind == 0) {
    if (n == 1) {
      const int a = rng.uniform(1, 3);
      return rng.coin() ? std::pair{Element::x(1, 1, a), -a} : std::pair{Element::y(1, 1, a), a};
    }
    const bool y = rng.coin();
    return {corner_shift(n, rng.uniform(1, n), y), y ? 1 : -1};
  }
  if (kind == 1) return {one + rng.finite_element(n, 2, 2), 0};
  if (kind == 2 && n >= 2) return {sn::atom_to_element(rng.corank_one_atom(n)), 0};
  return {sn::atom_to_element(rng.unit_atom(n, 1)), 0};
}

std::pair<Element, int> fredholm_sample(int n, Sampler& rng) {
  auto [a, ia] = fredholm_factor(n, rng);
  if (rng.coin()) return {a, ia};
  auto [b, ib] = fredholm_factor(n, rng);
  return {a * b, ia + ib};
}

std::pair<Element, Element> corank_one_unit(int n, Sampler& rng, int max_len) {
  const sn::GeneratorWord w = rng.corank_one_word(n, rng.uniform(1, max_len));
  return {sn::word_to_element(w), sn::word_to_element(sn::word_inverse(w))};
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

std::vector<int> apply_perm(const std::vector<int>& perm, const std::vector<int>& v) {
  std::vector<int> r;
  for (int k : v) r.push_back(perm[static_cast<std::size_t>(k - 1)]);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::vector<Scalar>& lambdas() {
  static const std::vector<Scalar> v{Scalar(2), Scalar(-1), Scalar(1, 3)};
  return v;
}

/// Visits every (J, i, j) with i != j in J and |J| >= min_size.
template <class F>
void for_theta(int n, int min_size, F&& f) {
  for (int size = std::max(2, min_size); size <= n; ++size)
    for (CoordSet J : sn::subsets_of_size(n, size))
      for (int i : J.elements())
        for (int j : J.elements())
          if (i != j) f(J, i, j);
}

std::string theta_tag(CoordSet J, int i, int j) {
  return "J=" + text(J) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

/// Commutator identities computed once per n and shared among their ids.
const IdentityCheck& commutator_family(int n, const std::string& id) {
  static std::map<int, std::vector<IdentityCheck>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, sn::commutator_identities_suite(n, lambdas(), 3)).first;
  for (const auto& c : it->second)
    if (c.id == id) return c;
  throw sn::ArgumentError("unknown commutator identity " + id);
}

void merge(IdentityCheck& out, const IdentityCheck& in, int n) {
  out.cases += in.cases;
  if (in.failures > 0 && out.failures == 0) out.detail = "n=" + std::to_string(n) + " " + in.detail;
  out.failures += in.failures;
}

SuiteEntry commutator_entry(const std::string& id, std::vector<int> dims) {
  return {id, 7, std::move(dims), 0, 0,
          [id](int n, int, Sampler&, IdentityCheck& out) { merge(out, commutator_family(n, id), n); }};
}

std::vector<SuiteEntry> build_entries() {
  std::vector<SuiteEntry> e;

  // Relations and basis.
  e.push_back({"yx", 1, {1, 2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for (int i = 1; i <= n; ++i)
                   out.record(Element::y(n, i) * Element::x(n, i) == Element::one(n), "i=" + std::to_string(i));
               }});
  e.push_back({"EabEcd", 1, {1, 2}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 const std::vector<MultiIndex> idx = box(n, 2);
                 std::map<std::pair<MultiIndex, MultiIndex>, Element> units;
                 for (const auto& a : idx)
                   for (const auto& b : idx) units.emplace(std::pair{a, b}, full_unit(n, a, b));
                 for (const auto& [ab, Eab] : units)
                   for (const auto& [cd, Ecd] : units) {
                     const Element expected = ab.second == cd.first ? units.at({ab.first, cd.second}) : Element(n);
                     out.record(Eab * Ecd == expected, text(ab.first) + text(ab.second) + text(cd.first) +
                                                           text(cd.second));
                   }
               }});
  e.push_back({"xyEij", 1, {1, 2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 const std::vector<MultiIndex> idx = box(n, n == 3 ? 1 : 2);
                 for (int k = 1; k <= n; ++k)
                   for (const auto& a : idx)
                     for (const auto& b : idx) {
                       const Element E = full_unit(n, a, b);
                       const MultiIndex ek = sn::unit_index(n, k);
                       const Element up = full_unit(n, a + ek, b);
                       const Element down = a[k - 1] > 0 ? full_unit(n, a - ek, b) : Element(n);
                       out.record(Element::x(n, k) * E == up && Element::y(n, k) * E == down,
                                  "k=" + std::to_string(k) + " " + text(a) + text(b));
                     }
               }});
  e.push_back({"xyEij1", 1, {1, 2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 const std::vector<MultiIndex> idx = box(n, n == 3 ? 1 : 2);
                 for (int k = 1; k <= n; ++k)
                   for (const auto& a : idx)
                     for (const auto& b : idx) {
                       const Element E = full_unit(n, a, b);
                       const MultiIndex ek = sn::unit_index(n, k);
                       const Element left = b[k - 1] > 0 ? full_unit(n, a, b - ek) : Element(n);
                       const Element right = full_unit(n, a, b + ek);
                       out.record(E * Element::x(n, k) == left && E * Element::y(n, k) == right,
                                  "k=" + std::to_string(k) + " " + text(a) + text(b));
                     }
               }});
  e.push_back({"eEij1", 1, {1, 2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 const std::vector<MultiIndex> idx = box(n, 2);
                 for (const auto& a : idx)
                   for (const auto& b : idx)
                     out.record(sn::involution(full_unit(n, a, b)) == full_unit(n, b, a), text(a) + text(b));
               }});
  e.push_back({"eta", 1, {1, 2, 3}, 20, 200, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Element a = rng.element(n, 4, 3);
                   const Element b = rng.element(n, 4, 3);
                   out.record(sn::involution(a * b) == sn::involution(b) * sn::involution(a) &&
                                  sn::involution(sn::involution(a)) == a,
                              sn::to_string(a) + " ; " + sn::to_string(b));
                 }
               }});

  // Mixed basis.
  e.push_back({"mS1d1", 2, {1}, 0, 0, [](int, int, Sampler&, IdentityCheck& out) {
                 const Element xy = Element::x(1, 1) * Element::y(1, 1);
                 const std::string mixed = sn::to_string(sn::to_mixed(xy));
                 out.record(mixed == "1 - E(0,0)", "xy -> " + mixed);
                 out.record(Element::y(1, 1) * Element::x(1, 1) == Element::one(1), "yx");
               }});
  e.push_back({"mixed-roundtrip", 2, {1, 2, 3}, 50, 500, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Element a = rng.element(n, 5, 4);
                   out.record(sn::from_mixed(sn::to_mixed(a)) == a, sn::to_string(a));
                 }
               }});

  // Filtration.
  e.push_back({"filtration", 3, {1, 2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for (int i = 0; i <= 8; ++i)
                   out.record(sn::filtration_dim(n, i) == binomial(i + 2 * n, 2 * n), "i=" + std::to_string(i));
               }});

  // Module action.
  e.push_back({"action-hom", 4, {1, 2, 3}, 50, 500, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Element a = rng.element(n, 3, 3);
                   const Element b = rng.element(n, 3, 3);
                   const sn::PolyElement p = rng.poly(n, 3, 4);
                   out.record(sn::apply(a * b, p) == sn::apply(a, sn::apply(b, p)),
                              sn::to_string(a) + " ; " + sn::to_string(b) + " ; " + sn::to_string(p));
                 }
               }});
  e.push_back({"curtij", 4, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 const std::vector<MultiIndex> alphas = box(n, 3);
                 for_theta(n, 2, [&](CoordSet J, int i, int j) {
                   const Element t = sn::theta(n, J, i, j);
                   for (const auto& a : alphas) {
                     bool rest_zero = true;
                     for (int k : J.elements())
                       if (k != i && k != j && a[k - 1] != 0) rest_zero = false;
                     MultiIndex expected = a;
                     if (rest_zero && a[i - 1] > 0 && a[j - 1] == 0) expected = a - sn::unit_index(n, i);
                     if (rest_zero && a[i - 1] == 0) expected = a + sn::unit_index(n, j);
                     out.record(sn::apply(t, a) == sn::PolyElement::monomial(expected),
                                theta_tag(J, i, j) + " alpha=" + text(a));
                   }
                 });
               }});

  // Index.
  e.push_back({"indxy", 5, {1}, 0, 0, [](int, int, Sampler&, IdentityCheck& out) {
                 for (int i = 1; i <= 4; ++i) {
                   out.record(sn::index(Element::x(1, 1, i)).index == -i, "x^" + std::to_string(i));
                   out.record(sn::index(Element::y(1, 1, i)).index == i, "y^" + std::to_string(i));
                 }
               }});
  e.push_back({"nindEy", 5, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for (int i = 1; i <= n; ++i)
                   out.record(sn::index(corner_shift(n, i, true)).index == 1, "i=" + std::to_string(i));
               }});
  e.push_back({"nindEy1", 5, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for (int i = 1; i <= n; ++i)
                   out.record(sn::index(corner_shift(n, i, false)).index == -1, "i=" + std::to_string(i));
               }});
  e.push_back({"ind-additive", 5, {1, 2, 3}, 10, 50, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const auto [a, ia] = fredholm_sample(n, rng);
                   const auto [b, ib] = fredholm_sample(n, rng);
                   const int ja = sn::index(a).index;
                   const int jb = sn::index(b).index;
                   const int jab = sn::index(a * b).index;
                   out.record(ja == ia && jb == ib && jab == ja + jb,
                              sn::to_string(a) + " ; " + sn::to_string(b) + " -> " + std::to_string(ja) + "," +
                                  std::to_string(jb) + "," + std::to_string(jab));
                 }
               }});
  e.push_back({"ind-perturb", 5, {1, 2, 3}, 10, 50, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Element a = fredholm_sample(n, rng).first;
                   const Element f = rng.finite_element(n, 3, 2);
                   out.record(sn::perturb_invariance_check(a, f), sn::to_string(a) + " + " + sn::to_string(f));
                 }
               }});
  e.push_back({"coker-adjoint", 5, {1, 2, 3}, 10, 50, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Element a = fredholm_sample(n, rng).first;
                   out.record(sn::direct_coker_dim(a) == sn::kernel_dim(sn::involution(a)), sn::to_string(a));
                 }
               }});

  // Componentwise indices.
  e.push_back({"indi", 6, {2, 3}, 20, 100, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Element u = corank_one_unit(n, rng, 3).first;
                   const Element v = corank_one_unit(n, rng, 3).first;
                   const std::vector<int> iu = sn::ind_vector(u);
                   const std::vector<int> iv = sn::ind_vector(v);
                   const bool sums_zero = std::accumulate(iu.begin(), iu.end(), 0) == 0 &&
                                          std::accumulate(iv.begin(), iv.end(), 0) == 0;
                   bool det_agrees = true;
                   for (int i = 1; i <= n; ++i)
                     det_agrees = det_agrees && sn::ind_i_det(u, i) == iu[static_cast<std::size_t>(i - 1)] &&
                                  sn::ind_i_det(v, i) == iv[static_cast<std::size_t>(i - 1)];
                   out.record(sums_zero && det_agrees && sn::ind_vector(u * v) == add(iu, iv),
                              sn::to_string(u) + " ; " + sn::to_string(v));
                 }
               }});
  e.push_back({"indi-theta", 6, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 const CoordSet full = CoordSet::full(n);
                 for (int j = 1; j <= n - 1; ++j) {
                   std::vector<int> expected(static_cast<std::size_t>(n), 0);
                   expected[static_cast<std::size_t>(j - 1)] = 1;
                   if (j < n - 1) expected[static_cast<std::size_t>(j)] = -1;
                   expected[static_cast<std::size_t>(n - 1)] -= std::accumulate(expected.begin(), expected.end() - 1, 0);
                   out.record(sn::ind_vector(sn::theta(n, full, j, j + 1)) == expected, "j=" + std::to_string(j));
                 }
               }});
  e.push_back({"ind-det", 6, {2, 3}, 20, 100, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Element u = corank_one_unit(n, rng, 3).first;
                   bool ok = true;
                   for (int i = 1; i <= n; ++i) ok = ok && sn::ind_i_det(u, i) == sn::ind_i(u, i);
                   out.record(ok, sn::to_string(u));
                 }
               }});

  // Theta group.
  e.push_back(commutator_entry("tiji", {2, 3}));
  e.push_back(commutator_entry("tijjk", {3}));
  e.push_back(commutator_entry("tmJ", {2, 3}));
  e.push_back(commutator_entry("tmJ1", {2, 3}));
  e.push_back(commutator_entry("meJij1", {2, 3}));
  e.push_back(commutator_entry("meJij2", {2, 3}));
  e.push_back(commutator_entry("meJij3", {2, 3}));
  e.push_back(commutator_entry("meJij4", {2, 3}));
  e.push_back({"thijm1", 7, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 const CoordSet full = CoordSet::full(n);
                 for (int i = 1; i <= n; ++i)
                   for (int j = 1; j <= n; ++j) {
                     if (i == j) continue;
                     const sn::Atom inv = sn::atom_inverse(sn::Atom::theta(n, full, i, j));
                     out.record(sn::atom_to_element(inv) == sn::theta(n, full, j, i) &&
                                    sn::theta(n, full, i, j) * sn::theta(n, full, j, i) == Element::one(n),
                                theta_tag(full, i, j));
                   }
               }});

  // Lattice images.
  e.push_back({"ptijJ", 8, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for (int s = 1; s <= n - 1; ++s)
                   for (CoordSet J : sn::subsets_of_size(n, s + 1))
                     for (int i : J.elements())
                       for (int j : J.elements()) {
                         if (i == j) continue;
                         sn::LatticeVector expected;
                         expected.add(i, J.without(i), -1);
                         expected.add(j, J.without(j), 1);
                         out.record(sn::psi_prime(sn::theta(n, J, i, j), s) == expected,
                                    "s=" + std::to_string(s) + " " + theta_tag(J, i, j));
                       }
               }});
  e.push_back({"ptijJ1", 8, {2, 3}, 10, 100, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int s = 1; s <= n - 1; ++s)
                   for (int t = 0; t < samples; ++t) {
                     const Element u = sn::word_to_element(rng.unit_word(n, s, rng.uniform(1, 3)));
                     const sn::LatticeVector v = sn::psi_prime(u, s);
                     bool ok = true;
                     for (CoordSet J : sn::subsets_of_size(n, s + 1)) ok = ok && sn::chi(J, v) == 0;
                     out.record(ok, "s=" + std::to_string(s) + " " + sn::to_string(u));
                   }
               }});
  e.push_back({"psi-hom", 8, {2, 3}, 10, 100, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int s = 1; s <= n - 1; ++s)
                   for (int t = 0; t < samples; ++t) {
                     const Element u = sn::word_to_element(rng.unit_word(n, s, rng.uniform(1, 3)));
                     const Element v = sn::word_to_element(rng.unit_word(n, s, rng.uniform(1, 3)));
                     out.record(sn::psi_prime(u * v, s) == sn::psi_prime(u, s) + sn::psi_prime(v, s),
                                "s=" + std::to_string(s) + " " + sn::to_string(u) + " ; " + sn::to_string(v));
                   }
               }});

  // Factorization.
  e.push_back({"factor-ann1", 9, {2, 3}, 5, 50, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const auto [u, u_inv] = corank_one_unit(n, rng, 4);
                   const sn::CorankOneFactorization f = sn::factor_ann1(u, u_inv);
                   Element product = sn::word_to_element(f.theta_word);
                   bool ok = true;
                   for (int k = 1; k <= n; ++k) {
                     const Element& uk = f.factors[static_cast<std::size_t>(k - 1)];
                     const Element& wk = f.factor_inverses[static_cast<std::size_t>(k - 1)];
                     ok = ok && uk * wk == Element::one(n) &&
                          sn::ideal_member(uk - Element::one(n),
                                           sn::IdealSpec::prime_set(CoordSet::single(k).complement(n)));
                     product = product * uk;
                   }
                   out.record(ok && product == u, sn::to_string(u));
                 }
               }});

  // Automorphisms.
  e.push_back({"aut-coherence", 10, {1, 2, 3}, 20, 200, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Automorphism a = rng.automorphism(n, rng.uniform(1, 3));
                   const Automorphism b = rng.automorphism(n, rng.uniform(1, 3));
                   const Automorphism c = sn::aut_compose(a, b);
                   const Element probe = rng.element(n, 3, 2);
                   bool ok = sn::aut_apply(c, probe) == sn::aut_apply(a, sn::aut_apply(b, probe));
                   for (int i = 1; i <= n; ++i) {
                     const Element xi = Element::x(n, i);
                     const Element yi = Element::y(n, i);
                     ok = ok && sn::aut_apply(c, xi) == sn::aut_apply(a, sn::aut_apply(b, xi)) &&
                          sn::aut_apply(c, yi) == sn::aut_apply(a, sn::aut_apply(b, yi));
                   }
                   out.record(ok, "probe " + sn::to_string(probe));
                 }
               }});
  e.push_back({"rigidity", 10, {1, 2, 3}, 10, 100, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Automorphism a = rng.automorphism(n, rng.uniform(1, 3));
                   const Automorphism c = rng.automorphism(n, rng.uniform(1, 2));
                   const Automorphism same = sn::aut_compose(sn::aut_compose(a, c), sn::aut_invert(c));
                   out.record(sn::rigidity_equal(a, same) && sn::images_equal(a, same), "equal pair");
                   const Scalar lambda = rng.nonzero_scalar();
                   if (lambda == 1) continue;
                   const CoordSet I = CoordSet::single(rng.uniform(1, n));
                   const Automorphism g = Automorphism::inner(sn::mu(I, Element::scalar(n, lambda)),
                                                              sn::mu(I, Element::scalar(n, 1 / lambda)));
                   const Automorphism other = sn::aut_compose(a, g);
                   out.record(sn::rigidity_equal(a, other) == sn::images_equal(a, other) &&
                                  !sn::rigidity_equal(a, other),
                              "mu pair lambda=" + sn::format_scalar(lambda));
                 }
               }});
  e.push_back({"comijt", 10, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 std::vector<std::vector<Scalar>> tori{{}};
                 for (int k = 0; k < n; ++k) {
                   std::vector<std::vector<Scalar>> next;
                   for (const auto& prefix : tori)
                     for (const Scalar& l : lambdas()) {
                       auto v = prefix;
                       v.push_back(l);
                       next.push_back(std::move(v));
                     }
                   tori = std::move(next);
                 }
                 for (int i = 1; i <= n; ++i)
                   for (int j = i + 1; j <= n; ++j)
                     for (const auto& l : tori) {
                       std::vector<Scalar> expected(static_cast<std::size_t>(n), Scalar(1));
                       const Scalar li = l[static_cast<std::size_t>(i - 1)];
                       const Scalar lj = l[static_cast<std::size_t>(j - 1)];
                       expected[static_cast<std::size_t>(i - 1)] = lj / li;
                       expected[static_cast<std::size_t>(j - 1)] = li / lj;
                       const Automorphism lhs =
                           sn::aut_commutator(Automorphism::transposition(n, i, j), Automorphism::torus(l));
                       out.record(sn::images_equal(lhs, Automorphism::torus(expected)),
                                  "i=" + std::to_string(i) + " j=" + std::to_string(j));
                     }
               }});
  e.push_back({"sost", 10, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for (const auto& s : permutations(n)) {
                   const Automorphism ps = Automorphism::permutation(s);
                   for_theta(n, 2, [&](CoordSet J, int i, int j) {
                     const std::vector<int> sJ = apply_perm(s, J.elements());
                     const Automorphism rhs = inner_theta(n, CoordSet(std::span<const int>(sJ)),
                                                          s[static_cast<std::size_t>(i - 1)],
                                                          s[static_cast<std::size_t>(j - 1)]);
                     out.record(sn::images_equal(conj(ps, inner_theta(n, J, i, j)), rhs), theta_tag(J, i, j));
                   });
                 }
               }});
  e.push_back({"sost1", 10, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for_theta(n, 2, [&](CoordSet J, int i, int j) {
                   const Automorphism lhs =
                       sn::aut_commutator(Automorphism::transposition(n, i, j), inner_theta(n, J, i, j));
                   const Automorphism rhs = Automorphism::inner(sn::pow(sn::theta(n, J, j, i), 2),
                                                                sn::pow(sn::theta(n, J, i, j), 2));
                   out.record(sn::images_equal(lhs, rhs), theta_tag(J, i, j));
                 });
               }});
  e.push_back({"sost2", 10, {3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for_theta(n, 3, [&](CoordSet J, int i, int j) {
                   for (int k : J.elements()) {
                     if (k == i || k == j) continue;
                     const Automorphism lhs =
                         sn::aut_commutator(Automorphism::transposition(n, i, k), inner_theta(n, J, i, j));
                     out.record(sn::images_equal(lhs, inner_theta(n, J, k, i)),
                                theta_tag(J, i, j) + " k=" + std::to_string(k));
                   }
                 });
               }});
  e.push_back({"sost3", 10, {2, 3}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 for (int i = 1; i <= n; ++i)
                   for (int j = 1; j <= n; ++j) {
                     if (i == j) continue;
                     for (const Scalar& l : lambdas()) {
                       std::vector<Scalar> torus(static_cast<std::size_t>(n), Scalar(1));
                       torus[static_cast<std::size_t>(i - 1)] = l;
                       const Automorphism lhs =
                           sn::aut_commutator(Automorphism::torus(torus), inner_theta(n, CoordSet{i, j}, i, j));
                       const CoordSet Ij = CoordSet::single(j);
                       const Automorphism rhs = Automorphism::inner(sn::mu(Ij, Element::scalar(n, 1 / l)),
                                                                    sn::mu(Ij, Element::scalar(n, l)));
                       out.record(sn::images_equal(lhs, rhs), "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                                                  " lambda=" + sn::format_scalar(l));
                     }
                   }
               }});
  e.push_back({"jacobian-hom", 10, {1, 2, 3}, 20, 200, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Automorphism a = rng.automorphism(n, rng.uniform(1, 3));
                   const Automorphism b = rng.automorphism(n, rng.uniform(1, 3));
                   out.record(sn::jacobian(sn::aut_compose(a, b)) == sn::jacobian(a) * sn::jacobian(b),
                              "sample " + std::to_string(t));
                 }
               }});
  e.push_back({"abelian-hom", 10, {1, 2, 3}, 20, 200, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Automorphism a = rng.automorphism(n, rng.uniform(1, 3));
                   const Automorphism b = rng.automorphism(n, rng.uniform(1, 3));
                   const sn::AbelianClass ab = sn::abelianization_class(sn::aut_compose(a, b));
                   const sn::AbelianClass expected =
                       sn::class_product(sn::abelianization_class(a), sn::abelianization_class(b));
                   out.record(ab == expected, sn::to_string(ab) + " vs " + sn::to_string(expected));
                 }
               }});
  e.push_back({"exotic-square", 10, {2}, 10, 100, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Automorphism a = rng.automorphism(n, rng.uniform(1, 4));
                   const Scalar ex = sn::jacobian_exotic(a);
                   const Scalar j = sn::jacobian(a);
                   out.record(ex * ex == j * j, sn::format_scalar(ex) + " vs " + sn::format_scalar(j));
                 }
               }});
  e.push_back({"exotic-hom", 10, {1, 2}, 10, 100, [](int n, int samples, Sampler& rng, IdentityCheck& out) {
                 for (int t = 0; t < samples; ++t) {
                   const Automorphism a = rng.automorphism(n, rng.uniform(1, 3));
                   const Automorphism b = rng.automorphism(n, rng.uniform(1, 3));
                   out.record(sn::jacobian_exotic(sn::aut_compose(a, b)) ==
                                  sn::jacobian_exotic(a) * sn::jacobian_exotic(b),
                              "sample " + std::to_string(t));
                 }
               }});
  e.push_back({"exotic-theta", 10, {2}, 0, 0, [](int n, int, Sampler&, IdentityCheck& out) {
                 const Automorphism w = inner_theta(n, CoordSet::full(n), 1, 2);
                 out.record(sn::jacobian(w) == 1 && sn::jacobian_exotic(w) == -1,
                            "J=" + sn::format_scalar(sn::jacobian(w)) + " Jex=" +
                                sn::format_scalar(sn::jacobian_exotic(w)));
               }});
  e.push_back({"exotic-n1", 10, {1}, 0, 0, [](int, int, Sampler&, IdentityCheck& out) {
                 const Element E00 = sn::idempotent(1, CoordSet{1});
                 const Element one = Element::one(1);
                 const Automorphism w = Automorphism::inner(one + E00, one - Scalar(1, 2) * E00);
                 out.record(sn::jacobian(w) == 1 && sn::jacobian_exotic(w) == 2,
                            "J=" + sn::format_scalar(sn::jacobian(w)) + " Jex=" +
                                sn::format_scalar(sn::jacobian_exotic(w)));
               }});
  return e;
}

}  // namespace

const std::vector<SuiteEntry>& suite_entries() {
  static const std::vector<SuiteEntry> entries = build_entries();
  return entries;
}

std::vector<SuiteResult> run_suite(const SuiteOptions& opts, const std::function<void(const SuiteResult&)>& on_result) {
  for (const auto& id : opts.filter) {
    const auto& all = suite_entries();
    if (std::none_of(all.begin(), all.end(), [&](const SuiteEntry& s) { return s.id == id; }))
      throw sn::ArgumentError("unknown identity id '" + id + "'");
  }
  std::vector<SuiteResult> results;
  for (const SuiteEntry& entry : suite_entries()) {
    if (!opts.filter.empty() && std::find(opts.filter.begin(), opts.filter.end(), entry.id) == opts.filter.end())
      continue;
    SuiteResult r;
    r.check = IdentityCheck(entry.id);
    r.criterion = entry.criterion;
    for (int n : entry.dims)
      if (!opts.n || *opts.n == n) r.dims.push_back(n);
    r.skipped = r.dims.empty();
    const int samples = opts.full ? entry.full_samples : entry.quick_samples;
    for (int n : r.dims) {
      Sampler rng(opts.seed * 1000003u + static_cast<std::uint64_t>(n));
      IdentityCheck part(entry.id);
      try {
        entry.run(n, samples, rng, part);
      } catch (const std::exception& ex) {
        part.record(false, std::string("exception: ") + ex.what());
      }
      merge(r.check, part, n);
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string result_line(const SuiteResult& r) {
  std::ostringstream os;
  if (r.skipped) {
    os << "SKIP " << r.check.id << " (no instances at this n)";
    return os.str();
  }
  os << (r.check.passed() ? "PASS " : "FAIL ") << r.check.id << " n=";
  for (std::size_t k = 0; k < r.dims.size(); ++k) os << (k ? "," : "") << r.dims[k];
  os << " cases=" << r.check.cases;
  if (!r.check.passed()) os << " failures=" << r.check.failures << ": " << r.check.detail;
  return os.str();
}

}  // namespace snc
