#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace berk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& q) { return q.sign(); }

/// Largest integer <= q.
Int floor_int(const Rat& q);

/// Exact q^e for integer e (e < 0 requires q != 0).
Rat pow_int(const Rat& q, long e);

/// Exact b^e for integer base and nonnegative integer exponent.
Int pow_int(const Int& b, unsigned long e);

/// True if n >= 2 is a perfect k-th power for some prime k.
bool is_perfect_power(const Int& n);

/// Canonical text form: "p" or "p/q" with the sign on the numerator.
std::string rat_str(const Rat& q);

}  // namespace berk
