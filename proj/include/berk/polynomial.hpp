#pragma once

#include <string>
#include <vector>

#include "berk/series.hpp"

namespace berk {

/// An element of K[T], coefficients indexed by degree with a nonzero
/// leading coefficient (the zero polynomial has no coefficients).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Series> coeffs);
    static Polynomial constant(Series c) { return Polynomial({std::move(c)}); }
    /// The monomial c * T^k.
    static Polynomial monomial(Series c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Series>& coeffs() const { return coeffs_; }
    Series coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Series(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

  private:
    std::vector<Series> coeffs_;
};

/// Exact evaluation P(z).
Series poly_eval(const Polynomial& p, const Series& z);

/// Q with Q(T) = P(T + a), exact binomial expansion.
Polynomial poly_recenter(const Polynomial& p, const Series& a);

}  // namespace berk
