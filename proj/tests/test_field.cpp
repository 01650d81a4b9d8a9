#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berk/errors.hpp"
#include "berk/polynomial.hpp"
#include "berk/series.hpp"
#include "test_util.hpp"

using namespace berk;

namespace {
const Series t = Series::monomial(Rat(1), Rat(1));
Series tp(long num, long den = 1) { return Series::monomial(Rat(1), Rat(num, den)); }
Magnitude b(long num, long den = 1) { return Magnitude::power(Rat(num, den)); }
}  // namespace

TEST_CASE("series ring basics") {
    CHECK((t - t).is_zero());
    CHECK(tp(1, 2) * tp(1, 2) == t);
    CHECK((Series(Rat(1)) + t) + (Series(Rat(-1)) + t) == Series::monomial(Rat(2), Rat(1)));
    CHECK((t * tp(-1)) == Series(Rat(1)));
    Series s = Series::from_terms({{Rat(1), Rat(2)}, {Rat(1), Rat(-2)}, {Rat(0), Rat(3)}});
    CHECK(s == Series(Rat(3)));
}

TEST_CASE("norm is the valuation rule") {
    CHECK(norm(tp(1, 2) + Series::monomial(Rat(3), Rat(2))) == b(-1, 2));
    CHECK(norm(Series()) == Magnitude::zero());
    CHECK(norm(tp(-1)) == b(1));
    CHECK(in_value_group(norm(t)));
}

TEST_CASE("ultrametric and multiplicativity on random triples") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 500; ++i) {
        Series x = testutil::random_series(rng), y = testutil::random_series(rng),
               z = testutil::random_series(rng);
        Magnitude lhs = norm(x - y);
        Magnitude a = norm(x - z), c = norm(z - y);
        CHECK(cmp(lhs, max(a, c)) <= 0);
        if (a != c) CHECK(lhs == max(a, c));  // isosceles
        CHECK(norm(x * y) == norm(x) * norm(y));
    }
}

TEST_CASE("chordal distance") {
    ProjPoint zero{Series()}, pt_t{t}, tinv{tp(-1)};
    CHECK(chordal(zero, pt_t) == b(-1));
    CHECK(chordal(zero, tinv) == Magnitude::one());
    CHECK(chordal(pt_t, pt_t) == Magnitude::zero());
    CHECK(chordal(zero, ProjPoint::infinity()) == Magnitude::one());
    CHECK(chordal(tinv, ProjPoint::infinity()) == b(-1));

    std::mt19937_64 rng(55);
    auto rand_point = [&](auto& r) {
        std::uniform_int_distribution<int> coin(0, 9);
        return coin(r) == 0 ? ProjPoint::infinity() : ProjPoint(testutil::random_series(r));
    };
    for (int i = 0; i < 400; ++i) {
        ProjPoint p = rand_point(rng), q = rand_point(rng), r = rand_point(rng);
        CHECK(cmp(chordal(p, q), Magnitude::one()) <= 0);
        CHECK(cmp(chordal(p, q), max(chordal(p, r), chordal(r, q))) <= 0);
        CHECK(chordal(p, q) == chordal(q, p));
        CHECK((chordal(p, q) == Magnitude::zero()) == (p == q));
    }
}

TEST_CASE("residue reduction") {
    CHECK(reduce(Series(Rat(3)) + tp(1, 2)) == 3);
    CHECK(reduce(t) == 0);
    CHECK_THROWS_AS(reduce(tp(-1)), OutOfUnitBall);
    CHECK(proj_reduce(ProjPoint{tp(-1)}).at_infinity);
    CHECK(proj_reduce(ProjPoint::infinity()).at_infinity);
    CHECK(proj_reduce(ProjPoint{Series(Rat(5)) + t}) == ResidueLabel{false, Rat(5)});

    // ring homomorphism on the unit ball
    std::mt19937_64 rng(77);
    auto unit_ball_series = [&](auto& r) {
        Series s = testutil::random_series(r);
        std::vector<Series::Term> kept;
        for (auto& term : s.terms())
            if (term.exp >= 0) kept.push_back(term);
        return Series::from_terms(kept);
    };
    for (int i = 0; i < 300; ++i) {
        Series x = unit_ball_series(rng), y = unit_ball_series(rng);
        CHECK(reduce(x + y) == reduce(x) + reduce(y));
        CHECK(reduce(x * y) == reduce(x) * reduce(y));
    }
}

TEST_CASE("polynomial evaluation and recentering") {
    // T^2 - 1 at 1
    Polynomial p({Series(Rat(-1)), Series(), Series(Rat(1))});
    CHECK(poly_eval(p, Series(Rat(1))).is_zero());
    // T^2 recentered at 1 -> T^2 + 2T + 1
    Polynomial q = poly_recenter(Polynomial::monomial(Series(Rat(1)), 2), Series(Rat(1)));
    CHECK(q == Polynomial({Series(Rat(1)), Series(Rat(2)), Series(Rat(1))}));
    CHECK(poly_eval(Polynomial::monomial(Series(Rat(1)), 1), t) == t);

    // recentering is evaluation-compatible: Q(z) = P(z + a)
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        std::uniform_int_distribution<int> deg(0, 4);
        std::vector<Series> coeffs;
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) coeffs.push_back(testutil::random_series(rng, 2));
        Polynomial r(coeffs);
        Series a = testutil::random_series(rng, 2), z = testutil::random_series(rng, 2);
        CHECK(poly_eval(poly_recenter(r, a), z) == poly_eval(r, z + a));
    }
}

TEST_CASE("series text form") {
    CHECK(Series().str() == "0");
    CHECK((Series(Rat(1)) + Series::monomial(Rat(2), Rat(1, 2)) - Series::monomial(Rat(1), Rat(3))).str() ==
          "1 + 2*t^(1/2) - t^3");
    CHECK(t.str() == "t");
    CHECK(tp(-1).str() == "t^(-1)");
    CHECK(Series::monomial(Rat(-1, 2), Rat(0)).str() == "-1/2");
    CHECK(Polynomial({Series(), Series(Rat(-1)), Series(Rat(1))}).str() == "T^2 - T");
}
