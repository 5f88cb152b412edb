#pragma once

#include <optional>
#include <string_view>

#include "sn/element.hpp"
#include "snc/ast.hpp"

namespace snc {

/// An evaluated expression, with a two-sided inverse when one is known.
struct Value {
  sn::Element element;
  std::optional<sn::Element> inverse;
};

/// Evaluates the tree in S_n. Negative powers need an inverse for their base;
/// NotAUnit otherwise.
Value evaluate(const Ast& a, int n);

/// parse_expression followed by evaluate.
Value evaluate_text(std::string_view text, int n);

/// Inverse by the square rule ((u-1)^2 = c(u-1), c != -1) or, for u - 1 in
/// F_n, block inversion. Every returned inverse has been multiplied out.
std::optional<sn::Element> find_inverse(const sn::Element& u);

/// The value's inverse, searching with find_inverse when none is attached.
/// NotAUnit when no inverse is found.
sn::Element require_inverse(Value& v);

}  // namespace snc
