#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gysin {

// Coefficient field. mpq_class keeps values canonical (positive denominator,
// reduced) after every arithmetic operation.
using Rational = mpq_class;

inline bool is_zero(const Rational &q) { return sgn(q) == 0; }

// Accepts "p", "-p" and "p/q" with decimal digits. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &q);

} // namespace gysin
