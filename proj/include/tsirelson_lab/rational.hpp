#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tsirelson_lab {

/// Exact scalar used throughout the library.
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" (decimal integers, d != 0) into a canonical
/// rational. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

inline Rational abs_value(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace tsirelson_lab
