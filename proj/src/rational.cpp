#include "berk/rational.hpp"

#include "berk/errors.hpp"

namespace berk {

Int floor_int(const Rat& q) {
    Int n = numerator(q) / denominator(q);  // truncates toward zero
    if (q < 0 && n * denominator(q) != numerator(q)) --n;
    return n;
}

Rat pow_int(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw DivisionByZero();
        return Rat(0);
    }
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat base = q, acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return invert ? Rat(1) / acc : acc;
}

Int pow_int(const Int& b, unsigned long e) {
    Int base = b, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool is_perfect_power(const Int& n) {
    if (n < 4) return false;
    for (unsigned k = 2; (Int(1) << k) <= n; ++k) {
        // binary search for an integer k-th root
        Int lo = 1, hi = n;
        while (lo < hi) {
            Int mid = (lo + hi + 1) / 2;
            if (pow_int(mid, k) <= n)
                lo = mid;
            else
                hi = mid - 1;
        }
        if (pow_int(lo, k) == n) return true;
    }
    return false;
}

std::string rat_str(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace berk
