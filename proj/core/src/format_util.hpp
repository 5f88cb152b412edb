#pragma once

#include <string>

#include "sn/scalar.hpp"

namespace sn::detail {

/// Appends "c*body" to a signed sum. An empty body denotes the unit.
inline void append_signed_term(std::string& out, const Scalar& c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Scalar mag = abs(c);
  if (body.empty()) {
    out += format_scalar(mag);
  } else if (mag == 1) {
    out += body;
  } else {
    out += format_scalar(mag) + "*" + body;
  }
}

/// "x1^2" style power, "" when e == 0.
inline std::string power_text(const std::string& base, int e) {
  if (e == 0) return {};
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

inline void join_factor(std::string& out, const std::string& factor) {
  if (factor.empty()) return;
  if (!out.empty()) out += "*";
  out += factor;
}

}  // namespace sn::detail
