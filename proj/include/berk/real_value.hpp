#pragma once

#include <string>
#include <utility>
#include <vector>

#include "berk/magnitude.hpp"

namespace berk {

/// A formal rational combination of magnitudes, sum of q_e * beta^e over
/// finitely many exponents e in Q + Q*tau. This is where tree distances
/// live: delta and the chordal distance subtract magnitudes, which the
/// value monoid itself cannot express.
///
/// Stored form: like exponents collected, zero coefficients dropped, and
/// any tau-component whose integer-part folding vanishes removed (for a
/// fixed tau-part b, the values beta^(f + b*tau) with rational f in [0,1)
/// are Q-linearly independent, so such a component is exactly zero).
/// Whether components with distinct b can cancel among themselves is a
/// transcendence question; sign() answers those by certified intervals
/// and reports PrecisionExhausted rather than guessing.
class RealValue {
  public:
    using Term = std::pair<Exponent, Rat>;

    RealValue() = default;

    /// rv_combine: sum of coeff * magnitude. Zero magnitudes contribute
    /// nothing; an infinite operand throws InfiniteOperand.
    static RealValue combine(const std::vector<std::pair<Rat, Magnitude>>& parts);

    static RealValue from_magnitude(const Magnitude& m, const Rat& coeff = Rat(1));

    bool is_zero() const { return terms_.empty(); }

    /// Terms in descending exponent order.
    const std::vector<Term>& terms() const { return terms_; }

    /// Folded normal form (rational exponent parts in [0,1)); two values
    /// are semantically equal iff their folded forms coincide.
    std::vector<Term> folded() const;

    RealValue operator+(const RealValue& o) const;
    RealValue operator-(const RealValue& o) const;
    RealValue operator-() const;
    RealValue scaled(const Rat& c) const;

    bool operator==(const RealValue& o) const;
    bool operator!=(const RealValue& o) const { return !(*this == o); }

    /// Certified sign: -1, 0, +1. Zero is decided symbolically; otherwise
    /// adaptive interval refinement up to `cap` steps (default: the
    /// configured precision cap). Throws PrecisionExhausted when a sum of
    /// distinct tau-components cannot be separated from zero.
    int sign(int cap = 0) const;

    /// Decimal approximation with `digits` fractional digits.
    std::string approx(int digits, int cap = 0) const;

    std::string str() const;

  private:
    explicit RealValue(std::vector<Term> collected) : terms_(std::move(collected)) {}
    void normalize();

    std::vector<Term> terms_;
};

/// Sign of x - y; may throw PrecisionExhausted on mixed-tau input.
int cmp(const RealValue& x, const RealValue& y);

inline bool operator<(const RealValue& x, const RealValue& y) { return cmp(x, y) < 0; }
inline bool operator<=(const RealValue& x, const RealValue& y) { return cmp(x, y) <= 0; }
inline bool operator>(const RealValue& x, const RealValue& y) { return cmp(x, y) > 0; }
inline bool operator>=(const RealValue& x, const RealValue& y) { return cmp(x, y) >= 0; }

}  // namespace berk
