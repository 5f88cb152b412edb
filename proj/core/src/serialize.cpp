#include "sn/serialize.hpp"

namespace sn {

namespace {

MultiIndex index_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ArgumentError("exponent vector must have length n");
  MultiIndex m(n);
  for (int i = 0; i < n; ++i) m[i] = j.at(static_cast<std::size_t>(i)).get<int>();
  return m;
}

Json index_to_json(const MultiIndex& m) { return m.to_vector(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ArgumentError("coefficient must be a \"p/q\" string or an integer");
}

}  // namespace

Json to_json(const Element& a) {
  Json terms = Json::array();
  for (const auto& [m, q] : a.terms())
    terms.push_back({{"alpha", index_to_json(m.alpha)}, {"beta", index_to_json(m.beta)}, {"coeff", format_scalar(q)}});
  return {{"n", a.n()}, {"terms", std::move(terms)}};
}

Element element_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    Element a(n);
    for (const auto& t : j.at("terms")) {
      const Monomial m = Monomial::make(index_from_json(t.at("alpha"), n), index_from_json(t.at("beta"), n));
      a.add_term(m, scalar_from_json(t.at("coeff")));
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed element JSON: ") + e.what());
  }
}

Json to_json(const IndexReport& r) {
  return {{"ker", r.ker}, {"coker", r.coker}, {"index", r.index}, {"stabilized_at", r.stabilized_at}};
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v.terms()) out.push_back({{"j", k.first}, {"I", k.second.elements()}, {"n", c}});
  return out;
}

LatticeVector lattice_from_json(const Json& j) {
  try {
    LatticeVector v;
    for (const auto& t : j) {
      const std::vector<int> coords = t.at("I").get<std::vector<int>>();
      v.add(t.at("j").get<int>(), CoordSet(std::span<const int>(coords)), t.at("n").get<long>());
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed lattice JSON: ") + e.what());
  }
}

Json to_json(const Automorphism& a) {
  Json lambda = Json::array();
  for (const auto& l : a.lambda) lambda.push_back(format_scalar(l));
  return {{"n", a.n}, {"perm", a.perm}, {"lambda", std::move(lambda)}, {"u", to_json(a.u)}, {"u_inv", to_json(a.u_inv)}};
}

Automorphism automorphism_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    std::vector<Scalar> lambda;
    for (const auto& l : j.at("lambda")) lambda.push_back(scalar_from_json(l));
    Element u = j.contains("u") ? element_from_json(j.at("u")) : Element::one(n);
    Element u_inv = j.contains("u_inv") ? element_from_json(j.at("u_inv")) : Element::one(n);
    require_same_n(n, u.n());
    return Automorphism::make(std::move(perm), std::move(lambda), std::move(u), std::move(u_inv));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed automorphism JSON: ") + e.what());
  }
}

Json to_json(const AbelianClass& c) {
  Json out = {{"n", c.n}, {"sign", c.sign}, {"torus_product", format_scalar(c.torus_product)}};
  if (c.det) out["det"] = format_scalar(*c.det);
  if (c.parity) out["parity"] = *c.parity;
  return out;
}

}  // namespace sn
