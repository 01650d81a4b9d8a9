#include "berk/polynomial.hpp"

namespace berk {

Polynomial::Polynomial(std::vector<Series> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(Series c, std::size_t k) {
    std::vector<Series> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Series> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Series> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Series> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(v));
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Series& c = coeffs_[k];
        if (c.is_zero()) continue;
        // constants and negated constants print bare, everything else parenthesized
        bool simple = c.terms().size() == 1 && c.terms()[0].exp == 0;
        Rat lead = simple ? c.terms()[0].coeff : Rat(1);
        bool neg = simple && lead < 0;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        Rat a = neg ? Rat(-lead) : lead;
        std::string coeff_txt;
        if (!simple)
            coeff_txt = "(" + c.str() + ")";
        else if (a != 1 || k == 0)
            coeff_txt = rat_str(a);
        if (k == 0) {
            s += coeff_txt.empty() ? "1" : coeff_txt;
            continue;
        }
        if (!coeff_txt.empty()) s += coeff_txt + "*";
        s += (k == 1) ? "T" : "T^" + std::to_string(k);
    }
    return s;
}

Series poly_eval(const Polynomial& p, const Series& z) {
    Series acc;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * z + p.coeffs()[k];
    return acc;
}

Polynomial poly_recenter(const Polynomial& p, const Series& a) {
    if (p.is_zero()) return p;
    auto n = p.coeffs().size();
    std::vector<Series> out(n);
    // q_k = sum_i C(i,k) p_i a^(i-k)
    std::vector<std::vector<Rat>> binom(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        binom[i][0] = 1;
        for (std::size_t k = 1; k <= i; ++k)
            binom[i][k] = binom[i - 1][k - 1] + (k <= i - 1 ? binom[i - 1][k] : Rat(0));
    }
    for (std::size_t k = 0; k < n; ++k) {
        Series acc;
        Series apow(Rat(1));
        for (std::size_t i = k; i < n; ++i) {
            acc = acc + p.coeffs()[i] * apow * Series(binom[i][k]);
            apow = apow * a;
        }
        out[k] = acc;
    }
    return Polynomial(std::move(out));
}

}  // namespace berk
