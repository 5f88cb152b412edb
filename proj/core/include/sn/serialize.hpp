#pragma once

#include <json.hpp>

#include "sn/automorphism.hpp"
#include "sn/element.hpp"
#include "sn/fredholm.hpp"
#include "sn/lattice.hpp"

namespace sn {

using Json = nlohmann::ordered_json;

/// {"n", "terms": [{"alpha", "beta", "coeff"}]} in canonical term order.
Json to_json(const Element& a);
Element element_from_json(const Json& j);

Json to_json(const IndexReport& r);
/// [{"j", "I", "n"}] ordered by (j, I).
Json to_json(const LatticeVector& v);
LatticeVector lattice_from_json(const Json& j);

/// {"n", "perm", "lambda", "u", "u_inv"}; perm lists s(1..n).
Json to_json(const Automorphism& a);
/// Validates through Automorphism::make.
Automorphism automorphism_from_json(const Json& j);

Json to_json(const AbelianClass& c);

}  // namespace sn
