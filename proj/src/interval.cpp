#include "berk/interval.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace berk {

QInterval add(const QInterval& x, const QInterval& y) { return {x.lo + y.lo, x.hi + y.hi}; }

QInterval scale(const QInterval& x, const Rat& c) {
    if (c >= 0) return {x.lo * c, x.hi * c};
    return {x.hi * c, x.lo * c};
}

QInterval mul(const QInterval& x, const QInterval& y) {
    Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

QInterval reciprocal(const QInterval& x) { return {Rat(1) / x.hi, Rat(1) / x.lo}; }

QInterval sqrt2_interval(int k) {
    thread_local std::vector<QInterval> cache{{Rat(1), Rat(3, 2)}};
    while (static_cast<int>(cache.size()) <= k) {
        QInterval cur = cache.back();
        Rat lo = cur.lo, hi = cur.hi;
        // bisect until both endpoints moved strictly inside the previous bracket
        while (lo <= cur.lo || hi >= cur.hi) {
            Rat mid = (lo + hi) / 2;
            if (mid * mid < 2)
                lo = mid;
            else
                hi = mid;
        }
        cache.push_back({lo, hi});
    }
    return cache[static_cast<std::size_t>(k)];
}

namespace {

// Incrementally refined bracket for the q-th root of an integer X >= 1.
QInterval root_bracket(const Int& x, unsigned long q, int steps) {
    struct State {
        Rat lo, hi;
        int done = 0;
    };
    thread_local std::map<std::pair<Int, unsigned long>, State> cache;
    auto& st = cache[{x, q}];
    if (st.done == 0) {
        st.lo = Rat(1);
        st.hi = Rat(x < 2 ? Int(2) : x);
        st.done = 1;
    }
    Rat target(x);
    while (st.done < steps) {
        Rat mid = (st.lo + st.hi) / 2;
        if (pow_int(mid, static_cast<long>(q)) <= target)
            st.lo = mid;
        else
            st.hi = mid;
        ++st.done;
    }
    return {st.lo, st.hi};
}

}  // namespace

QInterval pow_bracket(int beta, const Rat& e, int steps) {
    if (e == 0) return QInterval::point(Rat(1));
    Int p = numerator(e);
    unsigned long q = denominator(e).convert_to<unsigned long>();
    bool invert = p < 0;
    if (invert) p = -p;
    Int x = pow_int(Int(beta), p.convert_to<unsigned long>());
    QInterval r = (q == 1) ? QInterval::point(Rat(x)) : root_bracket(x, q, steps);
    return invert ? reciprocal(r) : r;
}

QInterval pow_bracket(int beta, const Exponent& e, int steps) {
    if (e.is_rational()) return pow_bracket(beta, e.a, steps);
    QInterval t = sqrt2_interval(std::max(1, steps / 4));
    QInterval y = scale(t, e.b);  // b*tau
    Rat ylo = y.lo + e.a, yhi = y.hi + e.a;
    // beta^x is increasing, so bound by the endpoint powers
    return {pow_bracket(beta, ylo, steps).lo, pow_bracket(beta, yhi, steps).hi};
}

Rat rational_below(const Exponent& e) {
    if (e.is_rational()) return e.a - 1;
    QInterval t = sqrt2_interval(1);
    return e.a + (e.b > 0 ? t.lo * e.b : t.hi * e.b);
}

Rat rational_above(const Exponent& e) {
    if (e.is_rational()) return e.a + 1;
    QInterval t = sqrt2_interval(1);
    return e.a + (e.b > 0 ? t.hi * e.b : t.lo * e.b);
}

Rat positive_rational_below(const Exponent& e) {
    if (e.is_rational()) return e.a / 2;
    for (int k = 1;; ++k) {
        QInterval t = sqrt2_interval(k);
        Rat lb = e.a + (e.b > 0 ? t.lo * e.b : t.hi * e.b);
        if (lb > 0) return lb;
    }
}

}  // namespace berk
