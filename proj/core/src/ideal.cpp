#include "sn/ideal.hpp"

#include <sstream>

namespace sn {

IdealSpec IdealSpec::prime_set(CoordSet I) {
  IdealSpec s;
  s.kind = Kind::PrimeSet;
  s.coords = I;
  return s;
}

IdealSpec IdealSpec::level_sum(int level) {
  IdealSpec s;
  s.kind = Kind::LevelSum;
  s.level = level;
  return s;
}

void IdealSpec::validate(int n) const {
  switch (kind) {
    case Kind::PrimeSet:
      if (coords.empty() || !coords.within(n)) throw ArgumentError("prime ideal needs a nonempty subset of {1..n}");
      break;
    case Kind::LevelSum:
      if (level < 1 || level > n) throw ArgumentError("ideal level must lie in 1..n");
      break;
    case Kind::MatrixIdeal:
      break;
  }
}

bool IdealSpec::admits(CoordSet t, int n) const {
  switch (kind) {
    case Kind::PrimeSet:
      return coords.subset_of(t);
    case Kind::LevelSum:
      return t.size() >= level;
    case Kind::MatrixIdeal:
      return t == CoordSet::full(n);
  }
  return false;
}

std::string to_string(const IdealSpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case IdealSpec::Kind::PrimeSet:
      os << "p:" << spec.coords;
      break;
    case IdealSpec::Kind::LevelSum:
      os << "a:" << spec.level;
      break;
    case IdealSpec::Kind::MatrixIdeal:
      os << "F";
      break;
  }
  return os.str();
}

bool ideal_member(const Element& a, const IdealSpec& spec) {
  spec.validate(a.n());
  const MixedElement mixed = to_mixed(a);
  for (const auto& [key, q] : mixed.terms())
    if (!spec.admits(key.etype(), a.n())) return false;
  return true;
}

std::vector<Element> corank_one_components(const Element& u, int full_to) {
  const int n = u.n();
  if (full_to < 1 || full_to > n) throw ArgumentError("component index out of range");
  const Element d = u - Element::one(n);
  std::vector<MixedElement> parts(static_cast<std::size_t>(n), MixedElement(n));
  const CoordSet full = CoordSet::full(n);
  const MixedElement mixed = to_mixed(d);
  for (const auto& [key, q] : mixed.terms()) {
    const CoordSet t = key.etype();
    int k = 0;
    if (t == full) {
      k = full_to;
    } else if (t.size() == n - 1) {
      k = t.complement(n).min();
    } else {
      throw MembershipError("u - 1 is not in a_{n,n-1}");
    }
    parts[static_cast<std::size_t>(k - 1)].add_term(key, q);
  }
  std::vector<Element> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(from_mixed(p));
  return out;
}

}  // namespace sn
