#include "snc/eval.hpp"

#include <span>

#include "sn/errors.hpp"
#include "sn/ideal.hpp"
#include "sn/units.hpp"
#include "snc/parser.hpp"

namespace snc {

namespace {

sn::CoordSet coords(const std::vector<int>& set) { return sn::CoordSet(std::span<const int>(set)); }

sn::MultiIndex indices(const std::vector<int>& v) { return sn::MultiIndex(std::span<const int>(v)); }

bool verified_inverse(const sn::Element& u, const sn::Element& w) {
  const sn::Element one = sn::Element::one(u.n());
  return u * w == one && w * u == one;
}

Value evaluate_node(const Ast& a, int n) {
  using K = Ast::Kind;
  switch (a.kind) {
    case K::Rational: {
      Value v{sn::Element::scalar(n, a.value), std::nullopt};
      if (a.value != 0) v.inverse = sn::Element::scalar(n, 1 / a.value);
      return v;
    }
    case K::Var:
      return {a.var == 'x' ? sn::Element::x(n, a.index) : sn::Element::y(n, a.index), std::nullopt};
    case K::MatUnit:
      return {sn::matrix_unit(n, coords(a.set), indices(a.alpha), indices(a.beta)), std::nullopt};
    case K::Mu: {
      const sn::CoordSet I = coords(a.set);
      Value payload = evaluate_node(a.children.at(0), n);
      Value v{sn::mu(I, payload.element), std::nullopt};
      if (payload.inverse) v.inverse = sn::mu(I, *payload.inverse);
      return v;
    }
    case K::Theta: {
      const sn::CoordSet J = coords(a.set);
      return {sn::theta(n, J, a.i, a.j), sn::theta(n, J, a.j, a.i)};
    }
    case K::Elem: {
      const sn::CoordSet I = coords(a.set);
      const Value coef = evaluate_node(a.children.at(0), n);
      const sn::Atom atom =
          sn::Atom::elementary_unchecked(n, I, coef.element, indices(a.alpha), indices(a.beta));
      Value v{sn::atom_to_element(atom), std::nullopt};
      if (a.alpha != a.beta) v.inverse = sn::atom_to_element(sn::atom_inverse(atom));
      return v;
    }
    case K::Sum: {
      Value v{sn::Element::zero(n), std::nullopt};
      for (std::size_t k = 0; k < a.children.size(); ++k) {
        const Value t = evaluate_node(a.children[k], n);
        if (a.negated[k]) {
          v.element -= t.element;
        } else {
          v.element += t.element;
        }
      }
      return v;
    }
    case K::Product: {
      Value v{sn::Element::one(n), sn::Element::one(n)};
      for (const Ast& child : a.children) {
        Value f = evaluate_node(child, n);
        v.element = v.element * f.element;
        if (v.inverse && f.inverse) {
          v.inverse = *f.inverse * *v.inverse;
        } else {
          v.inverse.reset();
        }
      }
      return v;
    }
    case K::Power: {
      Value base = evaluate_node(a.children.at(0), n);
      if (a.exponent >= 0) {
        Value v{sn::pow(base.element, a.exponent), std::nullopt};
        if (base.inverse) v.inverse = sn::pow(*base.inverse, a.exponent);
        return v;
      }
      const sn::Element inv = require_inverse(base);
      return {sn::pow(inv, -a.exponent), sn::pow(base.element, -a.exponent)};
    }
  }
  throw sn::ArgumentError("unknown expression node");
}

}  // namespace

Value evaluate(const Ast& a, int n) {
  sn::check_arity(n);
  return evaluate_node(a, n);
}

Value evaluate_text(std::string_view text, int n) { return evaluate(parse_expression(text, n), n); }

std::optional<sn::Element> find_inverse(const sn::Element& u) {
  const int n = u.n();
  const sn::Element one = sn::Element::one(n);
  const sn::Element d = u - one;
  if (d.is_zero()) return one;
  if (u.is_scalar()) {
    if (u.is_zero()) return std::nullopt;
    return sn::Element::scalar(n, 1 / u.constant_term());
  }

  const sn::Element d2 = d * d;
  const auto& [m, q] = *d.terms().begin();
  const sn::Scalar c = d2.coefficient(m) / q;
  if (c != -1 && d2 == c * d) {
    const sn::Element w = one - sn::Scalar(1 / (1 + c)) * d;
    if (verified_inverse(u, w)) return w;
  }

  if (sn::ideal_member(d, sn::IdealSpec::matrix_ideal())) {
    try {
      return sn::invert_one_plus_F(u);
    } catch (const sn::NotAUnit&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

sn::Element require_inverse(Value& v) {
  if (!v.inverse) v.inverse = find_inverse(v.element);
  if (!v.inverse) throw sn::NotAUnit("no inverse found for " + sn::to_string(v.element));
  return *v.inverse;
}

}  // namespace snc
