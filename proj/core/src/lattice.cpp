#include "sn/lattice.hpp"

#include <ostream>
#include <sstream>

#include "sn/laurent_matrix.hpp"

namespace sn {

long LatticeVector::coefficient(int j, CoordSet I) const {
  auto it = terms_.find({j, I});
  return it == terms_.end() ? 0 : it->second;
}

void LatticeVector::add(int j, CoordSet I, long c) {
  if (I.contains(j)) throw ArgumentError("lattice symbol (j, I) needs j outside I");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({j, I}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

LatticeVector operator-(const LatticeVector& a) {
  LatticeVector r = a;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

std::string to_string(const LatticeVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << "*";
    os << "(" << k.first << "," << k.second << ")";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }

LatticeVector psi_prime(const Element& u, int s) {
  const int n = u.n();
  if (s < 1 || s > n - 1) throw ArgumentError("psi_prime needs 1 <= s <= n-1");
  LatticeVector out;
  for (CoordSet I : subsets_of_size(n, s)) {
    const LaurentUnit d = det_degree(matrix_image(u, I));
    for (int j : I.complement(n).elements()) out.add(j, I, d.gamma[j - 1]);
  }
  return out;
}

long chi(CoordSet J, const LatticeVector& v) {
  long total = 0;
  for (const auto& [k, c] : v.terms())
    if (k.second.with(k.first) == J) total += c;
  return total;
}

}  // namespace sn
