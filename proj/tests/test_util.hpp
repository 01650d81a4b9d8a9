#pragma once

// Shared deterministic generators for the property tests. Everything is
// driven by a seeded mt19937 so failures reproduce.

#include <random>
#include <vector>

#include "berk/magnitude.hpp"
#include "berk/series.hpp"

namespace berk::testutil {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, int num_range = 8, int max_den = 6) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(Rng& rng, int num_range = 8, int max_den = 6) {
    Rat q = random_rat(rng, num_range, max_den);
    return q == 0 ? Rat(1) : q;
}

/// Series with at most max_terms terms, exponents with denominator <= 6.
inline Series random_series(Rng& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    int n = nterms(rng);
    std::vector<Series::Term> terms;
    for (int i = 0; i < n; ++i) terms.push_back({random_rat(rng, 6, 6), random_rat(rng, 9, 4)});
    return Series::from_terms(std::move(terms));
}

inline Series random_nonzero_series(Rng& rng, int max_terms = 5) {
    Series s = random_series(rng, max_terms);
    if (s.is_zero()) s = Series::monomial(Rat(1), random_rat(rng, 6, 6));
    return s;
}

inline Exponent random_rational_exponent(Rng& rng) { return Exponent(random_rat(rng, 6, 6)); }

inline Exponent random_exponent(Rng& rng, bool allow_tau = true) {
    std::uniform_int_distribution<int> coin(0, 3);
    if (allow_tau && coin(rng) == 0) return Exponent(random_rat(rng, 4, 4), random_nonzero_rat(rng, 2, 2));
    return random_rational_exponent(rng);
}

/// Positive magnitude beta^e with rational e (a value of |K*|).
inline Magnitude random_group_magnitude(Rng& rng) {
    return Magnitude::pos(random_rational_exponent(rng));
}

inline Magnitude random_radius(Rng& rng, bool allow_irrational = false) {
    return Magnitude::pos(random_exponent(rng, allow_irrational));
}

}  // namespace berk::testutil
