#pragma once

#include <gmpxx.h>

#include <string>

namespace lnq {

// All scalar arithmetic in the engine is exact: arbitrary-precision
// rationals, no floating point anywhere.
using Rat = mpq_class;

// base^exp for integer exp of either sign; base must be nonzero when exp < 0.
Rat rat_pow(const Rat& base, long exp);

// Parses "a", "-a", or "a/b" (b > 0 after normalization). Throws
// std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

// Canonical text form: "a" when the denominator is 1, else "a/b".
std::string rat_str(const Rat& value);

bool rat_is_integer(const Rat& value);

// Throws std::logic_error when a theorem-backed internal invariant fails.
// Always on; a trip here means an implementation bug, not bad user input.
void internal_check(bool condition, const std::string& message);

}  // namespace lnq
