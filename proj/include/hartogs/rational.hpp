#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace hartogs {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;  // always stored in lowest terms, q > 0

// Sign of a rational: -1, 0 or +1.
inline int sgn(const Rat& q) { return q.sign(); }

// Parses "p", "-p" or "p/q" with integer p, q and q != 0. Throws hartogs::Error on
// anything else (floats, empty strings, stray characters).
Rat rat_from_string(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q" with q > 1.
std::string rat_to_string(const Rat& q);

}  // namespace hartogs
