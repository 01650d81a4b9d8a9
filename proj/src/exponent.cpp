#include "berk/exponent.hpp"

namespace berk {

int Exponent::sign() const {
    if (b == 0) return sign_of(a);
    if (a == 0) return sign_of(b);
    int sa = sign_of(a), sb = sign_of(b);
    if (sa == sb) return sa;
    // Opposite signs: a + b*sqrt(2) has the sign of a^2 - 2*b^2 when a > 0,
    // and the opposite when a < 0 (compare |a| against |b|*sqrt(2)).
    int t = sign_of(a * a - 2 * b * b);
    return sa > 0 ? t : -t;
}

Int Exponent::floor() const {
    if (b == 0) return floor_int(a);
    // sqrt(2) is bracketed by the convergents 816/577 < sqrt(2) < 577/408.
    static const Rat lo(816, 577), hi(577, 408);
    Rat bound_lo = a + b * (b > 0 ? lo : hi);
    Int n = floor_int(bound_lo);
    // The bracket is ~4e-6 wide, so at most one correction step is needed.
    while ((*this - Exponent(Rat(n + 1))).sign() >= 0) ++n;
    return n;
}

std::string Exponent::str() const {
    if (b == 0) return rat_str(a);
    std::string s = "(" + rat_str(a);
    s += (b > 0) ? "+" : "-";
    Rat babs = b > 0 ? b : Rat(-b);
    s += rat_str(babs) + "*tau)";
    return s;
}

int cmp(const Exponent& x, const Exponent& y) {
    if (x == y) return 0;
    return (x - y).sign();
}

}  // namespace berk
