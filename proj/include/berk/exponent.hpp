#pragma once

#include <string>

#include "berk/rational.hpp"

namespace berk {

/// An element a + b*tau of Q + Q*tau, tau = sqrt(2). These are the exponents
/// of the extended value group: b == 0 lands in |K*| = beta^Q, b != 0 gives
/// the irrational radii. Since {1, tau} is Q-linearly independent, equality
/// is componentwise and the real order is decidable.
struct Exponent {
    Rat a;
    Rat b;

    Exponent() = default;
    Exponent(Rat a_, Rat b_ = Rat(0)) : a(std::move(a_)), b(std::move(b_)) {}
    Exponent(long a_) : a(a_), b(0) {}

    bool is_rational() const { return b == 0; }

    Exponent operator+(const Exponent& o) const { return {a + o.a, b + o.b}; }
    Exponent operator-(const Exponent& o) const { return {a - o.a, b - o.b}; }
    Exponent operator-() const { return {-a, -b}; }
    Exponent scaled(const Rat& q) const { return {a * q, b * q}; }

    bool operator==(const Exponent& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Exponent& o) const { return !(*this == o); }

    /// Sign of a + b*sqrt(2), decided exactly (never by approximation).
    int sign() const;

    /// Largest integer <= a + b*sqrt(2).
    Int floor() const;

    std::string str() const;
};

/// Total order matching the real order of a + b*sqrt(2): -1, 0, +1.
int cmp(const Exponent& x, const Exponent& y);

inline bool operator<(const Exponent& x, const Exponent& y) { return cmp(x, y) < 0; }
inline bool operator<=(const Exponent& x, const Exponent& y) { return cmp(x, y) <= 0; }
inline bool operator>(const Exponent& x, const Exponent& y) { return cmp(x, y) > 0; }
inline bool operator>=(const Exponent& x, const Exponent& y) { return cmp(x, y) >= 0; }

}  // namespace berk
