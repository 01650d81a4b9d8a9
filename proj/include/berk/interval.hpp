#pragma once

#include "berk/exponent.hpp"
#include "berk/rational.hpp"

namespace berk {

/// Closed rational interval certified to contain one real value.
struct QInterval {
    Rat lo;
    Rat hi;

    QInterval() = default;
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static QInterval point(const Rat& q) { return {q, q}; }

    Rat width() const { return hi - lo; }
    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
};

QInterval add(const QInterval& x, const QInterval& y);
QInterval scale(const QInterval& x, const Rat& c);
QInterval mul(const QInterval& x, const QInterval& y);
QInterval reciprocal(const QInterval& x);  // requires 0 outside x

/// k-th element of the canonical strictly nested bracket sequence for
/// sqrt(2), starting from (1, 3/2). Consecutive elements shrink on both
/// sides, which downstream code uses to build strictly nested annuli.
QInterval sqrt2_interval(int k);

/// Bracket for beta^e with rational e, tightened by `steps` bisections of
/// the q-th root of beta^p. Monotone in steps; exact when e is an integer.
QInterval pow_bracket(int beta, const Rat& e, int steps);

/// Bracket for beta^(a + b*sqrt(2)).
QInterval pow_bracket(int beta, const Exponent& e, int steps);

/// A rational strictly below (resp. above) a + b*sqrt(2).
Rat rational_below(const Exponent& e);
Rat rational_above(const Exponent& e);

/// A rational q with 0 < q < e; requires e.sign() > 0.
Rat positive_rational_below(const Exponent& e);

}  // namespace berk
