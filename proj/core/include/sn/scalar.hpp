#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sn {

/// Exact rational coefficient. GMP keeps `mpq_class` values reduced with a
/// positive denominator after every arithmetic operator.
using Scalar = mpq_class;

/// Parses "p", "-p", "p/q". Throws ArgumentError on malformed input or a zero
/// denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& q);

/// q^e for integer e; q must be nonzero when e < 0.
Scalar scalar_pow(const Scalar& q, long e);

}  // namespace sn
