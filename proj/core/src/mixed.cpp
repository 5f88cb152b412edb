#include "sn/mixed.hpp"

#include <ostream>
#include <utility>

#include "format_util.hpp"

namespace sn {

MixedSymbol MixedSymbol::xpow(int a) {
  if (a < 1) throw ArgumentError("x power in the mixed basis must be positive");
  return {Kind::XPow, a, 0};
}

MixedSymbol MixedSymbol::ypow(int b) {
  if (b < 1) throw ArgumentError("y power in the mixed basis must be positive");
  return {Kind::YPow, 0, b};
}

MixedSymbol MixedSymbol::mat(int a, int b) {
  if (a < 0 || b < 0) throw ArgumentError("negative matrix unit index");
  return {Kind::MatUnit, a, b};
}

CoordSet MixedKey::etype() const {
  CoordSet t;
  for (int i = 0; i < n(); ++i)
    if (symbols[static_cast<std::size_t>(i)].kind == MixedSymbol::Kind::MatUnit) t = t.with(i + 1);
  return t;
}

std::strong_ordering operator<=>(const MixedKey& a, const MixedKey& b) {
  if (auto c = a.etype().size() <=> b.etype().size(); c != 0) return c;
  return a.symbols <=> b.symbols;
}

void MixedElement::add_term(const MixedKey& k, const Scalar& q) {
  if (q == 0) return;
  if (k.n() != n_) throw DimensionError(n_, k.n());
  auto [it, inserted] = terms_.try_emplace(k, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

MixedElement MixedElement::filter(const std::function<bool(CoordSet)>& keep) const {
  MixedElement r(n_);
  for (const auto& [k, q] : terms_)
    if (keep(k.etype())) r.terms_.emplace(k, q);
  return r;
}

namespace {

using SymbolTerms = std::vector<std::pair<MixedSymbol, Scalar>>;

SymbolTerms rewrite_coordinate(int a, int b) {
  SymbolTerms out;
  if (a >= b) {
    out.emplace_back(a == b ? MixedSymbol::unit() : MixedSymbol::xpow(a - b), 1);
    for (int k = 0; k < b; ++k) out.emplace_back(MixedSymbol::mat(k + a - b, k), -1);
  } else {
    out.emplace_back(MixedSymbol::ypow(b - a), 1);
    for (int k = 0; k < a; ++k) out.emplace_back(MixedSymbol::mat(k, k + b - a), -1);
  }
  return out;
}

// Monomial pieces (x^a y^b, coefficient) of one mixed symbol.
std::vector<std::pair<std::pair<int, int>, int>> expand_symbol(const MixedSymbol& s) {
  switch (s.kind) {
    case MixedSymbol::Kind::Unit:
      return {{{0, 0}, 1}};
    case MixedSymbol::Kind::XPow:
      return {{{s.a, 0}, 1}};
    case MixedSymbol::Kind::YPow:
      return {{{0, s.b}, 1}};
    case MixedSymbol::Kind::MatUnit:
      return {{{s.a, s.b}, 1}, {{s.a + 1, s.b + 1}, -1}};
  }
  return {};
}

}  // namespace

MixedElement to_mixed(const Element& a) {
  const int n = a.n();
  MixedElement out(n);
  for (const auto& [m, q] : a.terms()) {
    std::vector<std::pair<MixedKey, Scalar>> partial{{MixedKey{}, q}};
    for (int i = 0; i < n; ++i) {
      const SymbolTerms local = rewrite_coordinate(m.alpha[i], m.beta[i]);
      std::vector<std::pair<MixedKey, Scalar>> next;
      next.reserve(partial.size() * local.size());
      for (const auto& [key, c] : partial) {
        for (const auto& [sym, d] : local) {
          MixedKey k = key;
          k.symbols.push_back(sym);
          next.emplace_back(std::move(k), c * d);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [k, c] : partial) out.add_term(k, c);
  }
  return out;
}

Element from_mixed(const MixedElement& mixed) {
  const int n = mixed.n();
  Element out(n);
  for (const auto& [key, q] : mixed.terms()) {
    std::vector<std::pair<Monomial, Scalar>> partial{{Monomial::one(n), q}};
    for (int i = 0; i < n; ++i) {
      const auto pieces = expand_symbol(key.symbols[static_cast<std::size_t>(i)]);
      std::vector<std::pair<Monomial, Scalar>> next;
      for (const auto& [m, c] : partial) {
        for (const auto& [ab, sign] : pieces) {
          Monomial mm = m;
          mm.alpha[i] = ab.first;
          mm.beta[i] = ab.second;
          next.emplace_back(mm, sign == 1 ? c : -c);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [m, c] : partial) out.add_term(m, c);
  }
  return out;
}

namespace {

std::string symbol_text(const MixedSymbol& s, int coord, int n) {
  const std::string idx = std::to_string(coord);
  switch (s.kind) {
    case MixedSymbol::Kind::Unit:
      return {};
    case MixedSymbol::Kind::XPow:
      return detail::power_text("x" + idx, s.a);
    case MixedSymbol::Kind::YPow:
      return detail::power_text("y" + idx, s.b);
    case MixedSymbol::Kind::MatUnit:
      return (n == 1 ? std::string("E") : "E" + idx) + "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
  }
  return {};
}

}  // namespace

std::string to_string(const MixedElement& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (const auto& [key, q] : m.terms()) {
    std::string body;
    for (int i = 0; i < key.n(); ++i)
      detail::join_factor(body, symbol_text(key.symbols[static_cast<std::size_t>(i)], i + 1, m.n()));
    detail::append_signed_term(out, q, body);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MixedElement& m) { return os << to_string(m); }

}  // namespace sn
