#include "berk/magnitude.hpp"

#include "berk/errors.hpp"

namespace berk {

Magnitude Magnitude::operator*(const Magnitude& o) const {
    if (is_zero())
        return o.is_infinite() ? throw UndefinedProduct() : zero();
    if (is_infinite())
        return o.is_zero() ? throw UndefinedProduct() : infinity();
    if (!o.is_pos()) return o * *this;
    return pos(exp_ + o.exp_);
}

Magnitude Magnitude::operator/(const Magnitude& o) const { return *this * o.reciprocal(); }

Magnitude Magnitude::reciprocal() const {
    switch (kind_) {
        case Kind::Zero: throw DivisionByZero();
        case Kind::Infinite: return zero();
        case Kind::Pos: return pos(-exp_);
    }
    return zero();
}

std::string Magnitude::str() const {
    switch (kind_) {
        case Kind::Zero: return "0";
        case Kind::Infinite: return "inf";
        case Kind::Pos: return "b^" + exp_.str();
    }
    return "0";
}

int cmp(const Magnitude& x, const Magnitude& y) {
    auto rank = [](const Magnitude& m) { return m.is_zero() ? 0 : m.is_pos() ? 1 : 2; };
    int rx = rank(x), ry = rank(y);
    if (rx != ry) return rx < ry ? -1 : 1;
    if (rx != 1) return 0;
    return cmp(x.exponent(), y.exponent());
}

Magnitude max(const Magnitude& x, const Magnitude& y) { return cmp(x, y) >= 0 ? x : y; }
Magnitude min(const Magnitude& x, const Magnitude& y) { return cmp(x, y) <= 0 ? x : y; }

Magnitude pow(const Magnitude& m, long k) {
    if (k == 0) return Magnitude::one();
    if (m.is_pos()) return Magnitude::pos(m.exponent().scaled(Rat(k)));
    if (k < 0) {
        if (m.is_zero()) throw DivisionByZero();
        return Magnitude::zero();
    }
    return m;
}

Magnitude pow(const Magnitude& m, const Rat& q) {
    if (q == 0) return Magnitude::one();
    if (m.is_pos()) return Magnitude::pos(m.exponent().scaled(q));
    if (q < 0) {
        if (m.is_zero()) throw DivisionByZero();
        return Magnitude::zero();
    }
    return m;
}

bool in_value_group(const Magnitude& m) { return m.is_pos() && m.exponent().is_rational(); }

}  // namespace berk
