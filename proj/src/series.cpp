#include "berk/series.hpp"

#include <algorithm>
#include <map>

#include "berk/errors.hpp"

namespace berk {

Series::Series(Rat c) {
    if (c != 0) terms_.push_back({Rat(0), std::move(c)});
}

Series Series::monomial(Rat coeff, Rat exp) {
    Series s;
    if (coeff != 0) s.terms_.push_back({std::move(exp), std::move(coeff)});
    return s;
}

Series Series::from_terms(std::vector<Term> terms) {
    std::map<Rat, Rat> collected;
    for (auto& t : terms) collected[t.exp] += t.coeff;
    Series s;
    for (auto& [e, c] : collected)
        if (c != 0) s.terms_.push_back({e, c});
    return s;
}

std::optional<Rat> Series::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exp;
}

Rat Series::coeff_at(const Rat& e) const {
    for (const auto& t : terms_) {
        if (t.exp == e) return t.coeff;
        if (t.exp > e) break;
    }
    return Rat(0);
}

Series Series::operator+(const Series& o) const {
    std::vector<Term> merged = terms_;
    merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(std::move(merged));
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const {
    Series s = *this;
    for (auto& t : s.terms_) t.coeff = -t.coeff;
    return s;
}

Series Series::operator*(const Series& o) const {
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& x : terms_)
        for (const auto& y : o.terms_) prod.push_back({x.exp + y.exp, x.coeff * y.coeff});
    return from_terms(std::move(prod));
}

bool Series::operator==(const Series& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::string Series::str() const {
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
        if (e == 0) {
            s += rat_str(a);
            continue;
        }
        if (a != 1) s += rat_str(a) + "*";
        if (e == 1) {
            s += "t";
        } else if (denominator(e) == 1 && e > 0) {
            s += "t^" + rat_str(e);
        } else {
            s += "t^(" + rat_str(e) + ")";
        }
    }
    return s;
}

Magnitude norm(const Series& x) {
    auto v = x.valuation();
    if (!v) return Magnitude::zero();
    return Magnitude::power(-*v);
}

Rat reduce(const Series& z) {
    if (cmp(norm(z), Magnitude::one()) > 0) throw OutOfUnitBall();
    return z.coeff_at(Rat(0));
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return value() == o.value();
}

std::string ProjPoint::str() const { return is_infinity() ? "inf" : value().str(); }

Magnitude chordal(const ProjPoint& p, const ProjPoint& q) {
    // Delta([x:y],[x':y']) = |xy' - yx'| / (max(|x|,|y|) * max(|x'|,|y'|))
    // with finite points as [z:1] and infinity as [1:0].
    auto scale = [](const ProjPoint& r) {
        return r.is_infinity() ? Magnitude::one() : max(norm(r.value()), Magnitude::one());
    };
    Magnitude num;
    if (p.is_infinity() && q.is_infinity())
        num = Magnitude::zero();
    else if (p.is_infinity())
        num = Magnitude::one();
    else if (q.is_infinity())
        num = Magnitude::one();
    else
        num = norm(p.value() - q.value());
    return num / (scale(p) * scale(q));
}

ResidueLabel proj_reduce(const ProjPoint& p) {
    if (p.is_infinity() || cmp(norm(p.value()), Magnitude::one()) > 0) return {true, Rat(0)};
    return {false, reduce(p.value())};
}

}  // namespace berk
