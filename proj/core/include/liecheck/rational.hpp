#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liecheck {

using Int = mpz_class;
using Rat = mpq_class;

/// "p/q", or "n" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

/// Accepts "n", "-n" and "p/q"; the result is canonical.
Rat parse_rat(std::string_view text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }
inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

Rat factorial(unsigned n);

}  // namespace liecheck
