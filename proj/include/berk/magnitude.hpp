#pragma once

#include <string>

#include "berk/exponent.hpp"

namespace berk {

/// An element of the extended value monoid: 0, beta^e, or +infinity.
/// Positive values multiply by adding exponents; 0 and +infinity are the
/// absorbing ends (their product is undefined). Used for norms, radii and
/// diameters; diam(infinity-point) = +infinity lives here too.
class Magnitude {
  public:
    enum class Kind { Zero, Pos, Infinite };

    Magnitude() : kind_(Kind::Zero) {}

    static Magnitude zero() { return Magnitude(); }
    static Magnitude infinity() {
        Magnitude m;
        m.kind_ = Kind::Infinite;
        return m;
    }
    static Magnitude pos(Exponent e) {
        Magnitude m;
        m.kind_ = Kind::Pos;
        m.exp_ = std::move(e);
        return m;
    }
    /// beta^q for rational q.
    static Magnitude power(Rat q) { return pos(Exponent(std::move(q))); }
    static Magnitude one() { return power(Rat(0)); }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_pos() const { return kind_ == Kind::Pos; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_one() const { return kind_ == Kind::Pos && exp_.a == 0 && exp_.b == 0; }

    /// Exponent of a positive value; callers must check is_pos() first.
    const Exponent& exponent() const { return exp_; }

    Magnitude operator*(const Magnitude& o) const;
    Magnitude operator/(const Magnitude& o) const;
    Magnitude reciprocal() const;

    std::string str() const;

  private:
    Kind kind_;
    Exponent exp_;
};

/// Total order with Zero least and +infinity greatest: -1, 0, +1.
int cmp(const Magnitude& x, const Magnitude& y);

inline bool operator==(const Magnitude& x, const Magnitude& y) { return cmp(x, y) == 0; }
inline bool operator!=(const Magnitude& x, const Magnitude& y) { return cmp(x, y) != 0; }
inline bool operator<(const Magnitude& x, const Magnitude& y) { return cmp(x, y) < 0; }
inline bool operator<=(const Magnitude& x, const Magnitude& y) { return cmp(x, y) <= 0; }
inline bool operator>(const Magnitude& x, const Magnitude& y) { return cmp(x, y) > 0; }
inline bool operator>=(const Magnitude& x, const Magnitude& y) { return cmp(x, y) >= 0; }

Magnitude max(const Magnitude& x, const Magnitude& y);
Magnitude min(const Magnitude& x, const Magnitude& y);

/// Integer power; k < 0 requires a nonzero finite operand.
Magnitude pow(const Magnitude& m, long k);

/// Rational exponent scaling beta^e -> beta^(e*q); q > 0 required for the ends.
Magnitude pow(const Magnitude& m, const Rat& q);

/// True iff m = beta^e with rational e, i.e. m is a value |z| of a nonzero
/// field element. Zero and +infinity are outside |K*| by convention.
bool in_value_group(const Magnitude& m);

}  // namespace berk
