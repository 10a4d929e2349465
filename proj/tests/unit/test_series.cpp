#include "doctest.h"

#include "chopf/diffeo.hpp"
#include "chopf/errors.hpp"
#include "chopf/series.hpp"

using namespace chopf;

namespace {

Series poly(const std::vector<int>& coeffs, int cap)
{
    std::vector<Element> c;
    for (int v : coeffs)
        c.push_back(Element::constant(Scalar(v)));
    return Series::from_coefficients(c, cap);
}

Series rational(Series s)
{
    s.set_ground(Ground::rationals);
    return s;
}

} // namespace

TEST_CASE("products and powers truncate at the cap")
{
    const Series t = Series::variable(kScalarSpace, 1, 4);
    const Series f = t + t * t;
    CHECK(ps_pow(f, 2) == poly({0, 0, 1, 2, 1}, 4));
    CHECK(ps_pow(f, 5).is_zero());
    CHECK(ps_mul(f, Series::constant(Element::constant(Scalar(1)), 1, 4)) == f);
}

TEST_CASE("inverse of a unit")
{
    const Series f = poly({1, -1}, 6);
    CHECK(ps_invert(f) == poly({1, 1, 1, 1, 1, 1, 1}, 6));
    CHECK(ps_mul(f, ps_invert(f)) == poly({1}, 6));
    CHECK_THROWS_AS(ps_invert(poly({0, 1}, 4)), DomainError);
    CHECK_THROWS_AS(ps_invert(poly({2, 1}, 4)), DomainError);
    CHECK(ps_invert(rational(poly({2}, 2))) == rational(Series::constant(Element::constant(Scalar(1, 2)), 1, 2)));
}

TEST_CASE("composition")
{
    const Series f = poly({0, 1, 1}, 4);
    CHECK(ps_compose(f, f) == poly({0, 1, 2, 2, 1}, 4));
    CHECK_THROWS_AS(ps_compose(f, poly({1, 1}, 4)), DomainError);
}

TEST_CASE("reversion round trip on the generic diffeomorphism")
{
    for (int cap = 1; cap <= 8; ++cap) {
        const Series t = fdb_generic_series(kFdB, cap);
        const Series g = ps_revert(t);
        const Series id = Series::variable(kFdB, 1, cap);
        CHECK(ps_compose(t, g) == id);
        CHECK(ps_compose(g, t) == id);
    }
}

TEST_CASE("reversion agrees with Lagrange inversion")
{
    // n [T^n] g = [T^(n-1)] (T / f)^n
    const int cap = 7;
    const Series f = fdb_generic_series(kFdB, cap);
    const Series g = ps_revert(f);
    const Series quotient = ps_invert(ps_shift(f, -1));
    for (int n = 1; n <= cap; ++n)
        CHECK(g.coefficient(n) * Scalar(n) == ps_pow(quotient, n).coefficient(n - 1));
}

TEST_CASE("residue")
{
    Series s(kNSym, 1, 4);
    s.add_term({-2, 0}, Element::basis(kNSym, {1}));
    s.add_term({-1, 0}, Element::basis(kNSym, {2}));
    s.add_term({0, 0}, Element::basis(kNSym, {3}));
    CHECK(ps_residue(s) == Element::basis(kNSym, {2}));
    CHECK(ps_residue(poly({1, 2}, 3)).is_zero());
}

TEST_CASE("exp and log are inverse")
{
    const Series x = rational(poly({0, 1, 3, -2, 5}, 6));
    CHECK(ps_log(ps_exp(x)) == x);
    const Series u = rational(poly({1, 2, 0, 7}, 6));
    CHECK(ps_exp(ps_log(u)) == u);
    const Series l = ps_log(rational(poly({1, 1}, 4)));
    CHECK(l.coefficient(4) == Element::constant(Scalar(-1, 4)));
    CHECK_THROWS(ps_exp(poly({0, 1}, 3)));
}

TEST_CASE("bivariate helpers")
{
    const Series x = ps_embed(Series::variable(kScalarSpace, 1, 3), 0);
    const Series y = ps_embed(Series::variable(kScalarSpace, 1, 3), 1);
    const Series s = x + y + x * y;
    CHECK(ps_set_zero(s, 1) == Series::variable(kScalarSpace, 1, 3));
    CHECK(s.str() == "X + Y + X*Y");
}

TEST_CASE("noncommutative coefficients keep their order")
{
    const Series z = nsym_generic_series(4);
    const Series sq = ps_pow(z, 2);
    CHECK(sq.coefficient(3) == Element::basis(kNSym, {1}) * Scalar(2));
    CHECK(sq.coefficient(4) == Element::basis(kNSym, {1, 1}) + Element::basis(kNSym, {2}) * Scalar(2));
}
