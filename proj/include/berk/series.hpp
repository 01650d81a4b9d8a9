#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berk/magnitude.hpp"

namespace berk {

/// A field element of the working model of K: a finite formal sum of
/// rational coefficients times rational powers of the uniformizer t,
/// kept with strictly increasing exponents and no zero coefficients.
/// The valuation is the least exponent and |x| = beta^(-valuation), so
/// the value group beta^Q is dense and the residue field is Q. Addition,
/// subtraction and multiplication are exact; there is no division.
class Series {
  public:
    struct Term {
        Rat exp;
        Rat coeff;
    };

    Series() = default;
    /// Constant series c * t^0.
    explicit Series(Rat c);
    static Series monomial(Rat coeff, Rat exp);
    static Series from_terms(std::vector<Term> terms);  // collects and normalizes

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Least exponent; empty for the zero series.
    std::optional<Rat> valuation() const;

    Rat coeff_at(const Rat& e) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;

    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::vector<Term> terms_;
};

/// |x| = beta^(-valuation), with norm(0) = 0.
Magnitude norm(const Series& x);

/// Image in the residue field Q of an integral element (norm <= 1): the
/// coefficient at exponent 0. Throws OutOfUnitBall above the unit ball.
Rat reduce(const Series& z);

/// A point of the projective line, canonically [x:1] or infinity = [1:0].
class ProjPoint {
  public:
    ProjPoint() : finite_(Series()) {}
    ProjPoint(Series x) : finite_(std::move(x)) {}
    static ProjPoint infinity() {
        ProjPoint p;
        p.finite_.reset();
        return p;
    }

    bool is_infinity() const { return !finite_.has_value(); }
    const Series& value() const { return *finite_; }

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::optional<Series> finite_;
};

/// Chordal distance on the projective line, values in [0, 1].
Magnitude chordal(const ProjPoint& p, const ProjPoint& q);

/// Reduction of the projective line to P^1 over the residue field; points
/// outside the unit ball and infinity all land on the infinite fiber.
struct ResidueLabel {
    bool at_infinity = false;
    Rat value;

    bool operator==(const ResidueLabel& o) const {
        return at_infinity == o.at_infinity && (at_infinity || value == o.value);
    }
    std::string str() const { return at_infinity ? "~inf" : rat_str(value); }
};

ResidueLabel proj_reduce(const ProjPoint& p);

}  // namespace berk
