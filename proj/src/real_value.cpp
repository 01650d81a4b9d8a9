#include "berk/real_value.hpp"

#include <algorithm>
#include <map>

#include "berk/config.hpp"
#include "berk/errors.hpp"
#include "berk/interval.hpp"

namespace berk {

namespace {

struct ExpLess {
    bool operator()(const Exponent& x, const Exponent& y) const { return cmp(x, y) < 0; }
};

using TermMap = std::map<Exponent, Rat, ExpLess>;

std::vector<RealValue::Term> to_descending(const TermMap& m) {
    std::vector<RealValue::Term> out(m.rbegin(), m.rend());
    return out;
}

// Integer-part folding of a list of terms sharing one tau-part.
TermMap fold_component(const std::vector<RealValue::Term>& terms) {
    int beta = value_base();
    TermMap out;
    for (const auto& [e, c] : terms) {
        Int n = floor_int(e.a);
        Exponent key(e.a - Rat(n), e.b);
        Rat scaled = c * pow_int(Rat(beta), n.convert_to<long>());
        auto [it, inserted] = out.try_emplace(key, scaled);
        if (!inserted) {
            it->second += scaled;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

QInterval term_bracket(const RealValue::Term& t, int steps) {
    return scale(pow_bracket(value_base(), t.first, steps), t.second);
}

QInterval sum_bracket(const std::vector<RealValue::Term>& terms, int steps) {
    QInterval acc = QInterval::point(Rat(0));
    for (const auto& t : terms) acc = add(acc, term_bracket(t, steps));
    return acc;
}

// Refine until the bracket excludes zero, giving up at `cap` steps.
int separated_sign(const std::vector<RealValue::Term>& terms, int cap) {
    int steps = 8;
    while (true) {
        QInterval iv = sum_bracket(terms, std::min(steps, cap));
        if (iv.positive()) return 1;
        if (iv.negative()) return -1;
        if (steps >= cap) break;
        steps *= 2;
    }
    throw PrecisionExhausted();
}

}  // namespace

void RealValue::normalize() {
    TermMap collected;
    for (auto& [e, c] : terms_) {
        if (c == 0) continue;
        auto [it, inserted] = collected.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) collected.erase(it);
        }
    }
    // Group by tau-part and drop components whose folded form vanishes.
    std::map<Rat, std::vector<Term>> by_tau;
    for (const auto& [e, c] : collected) by_tau[e.b].push_back({e, c});
    TermMap kept;
    for (const auto& [b, comp] : by_tau) {
        if (fold_component(comp).empty()) continue;
        for (const auto& t : comp) kept.insert(t);
    }
    terms_ = to_descending(kept);
}

RealValue RealValue::combine(const std::vector<std::pair<Rat, Magnitude>>& parts) {
    std::vector<Term> raw;
    raw.reserve(parts.size());
    for (const auto& [coeff, mag] : parts) {
        if (mag.is_infinite()) throw InfiniteOperand();
        if (mag.is_zero() || coeff == 0) continue;
        raw.push_back({mag.exponent(), coeff});
    }
    RealValue v(std::move(raw));
    v.normalize();
    return v;
}

RealValue RealValue::from_magnitude(const Magnitude& m, const Rat& coeff) {
    return combine({{coeff, m}});
}

std::vector<RealValue::Term> RealValue::folded() const {
    std::map<Rat, std::vector<Term>> by_tau;
    for (const auto& t : terms_) by_tau[t.first.b].push_back(t);
    TermMap out;
    for (const auto& [b, comp] : by_tau)
        for (const auto& t : fold_component(comp)) out.insert(t);
    return to_descending(out);
}

RealValue RealValue::operator+(const RealValue& o) const {
    std::vector<Term> raw = terms_;
    raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
    RealValue v(std::move(raw));
    v.normalize();
    return v;
}

RealValue RealValue::operator-(const RealValue& o) const { return *this + (-o); }

RealValue RealValue::operator-() const {
    RealValue v = *this;
    for (auto& t : v.terms_) t.second = -t.second;
    return v;
}

RealValue RealValue::scaled(const Rat& c) const {
    if (c == 0) return RealValue();
    RealValue v = *this;
    for (auto& t : v.terms_) t.second *= c;
    return v;
}

bool RealValue::operator==(const RealValue& o) const { return (*this - o).is_zero(); }

int RealValue::sign(int cap) const {
    if (terms_.empty()) return 0;
    if (cap <= 0) cap = precision_cap();
    if (terms_.size() == 1) return sign_of(terms_[0].second);

    std::map<Rat, std::vector<Term>> by_tau;
    for (const auto& t : terms_) by_tau[t.first.b].push_back(t);
    if (by_tau.size() == 1) {
        // One tau-component: beta^(b*tau) > 0 factors out, leaving a pure
        // rational-exponent sum that is provably nonzero.
        std::vector<Term> pure;
        for (const auto& t : terms_) pure.push_back({Exponent(t.first.a), t.second});
        return separated_sign(pure, cap);
    }
    return separated_sign(terms_, cap);
}

std::string RealValue::approx(int digits, int cap) const {
    if (cap <= 0) cap = precision_cap();
    Rat tol = pow_int(Rat(1, 10), digits + 1);
    QInterval iv = QInterval::point(Rat(0));
    for (int steps = 8;; steps = std::min(steps * 2, cap)) {
        iv = sum_bracket(terms_, steps);
        if (iv.width() < tol || steps >= cap) break;
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    bool neg = mid < 0;
    if (neg) mid = -mid;
    Int ip = floor_int(mid);
    Rat frac = mid - Rat(ip);
    std::string s = (neg ? "-" : "") + ip.str() + ".";
    for (int i = 0; i < digits; ++i) {
        frac *= 10;
        Int d = floor_int(frac);
        s += d.str();
        frac -= Rat(d);
    }
    return s;
}

std::string RealValue::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        if (a != 1) s += rat_str(a) + "*";
        s += "b^" + e.str();
    }
    return s;
}

int cmp(const RealValue& x, const RealValue& y) { return (x - y).sign(); }

}  // namespace berk
