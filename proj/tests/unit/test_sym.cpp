#include "doctest.h"

#include "chopf/sym.hpp"
#include "oracles.hpp"

using namespace chopf;

namespace {

const Space kSpaces[] = {kSymE, kSymH, kSymP, kSymM};

Element b(Space s, Word w) { return Element::basis(s, std::move(w)); }

} // namespace

TEST_CASE("products in each basis")
{
    CHECK(b(kSymE, {1}) * b(kSymE, {1}) == b(kSymE, {1, 1}));
    CHECK(b(kSymM, {1}) * b(kSymM, {1}) == b(kSymM, {1, 1}) * Scalar(2) + b(kSymM, {2}));
    CHECK(b(kSymH, {1}) * b(kSymH, {2}) == b(kSymH, {2, 1}));
}

TEST_CASE("basis conversions agree with explicit polynomials")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (Space from : kSpaces)
                for (Space to : kSpaces) {
                    const Element x = b(from, lam.parts());
                    const Element y = sym_convert_rational(x, to.basis);
                    CHECK(oracle::sym_poly(x, n) == oracle::sym_poly(y, n));
                }
}

TEST_CASE("specific conversions")
{
    CHECK(sym_convert(b(kSymH, {2}), Basis::e) == b(kSymE, {1, 1}) - b(kSymE, {2}));
    CHECK(sym_convert(b(kSymP, {2}), Basis::e) == b(kSymE, {1, 1}) - b(kSymE, {2}) * Scalar(2));
    CHECK(sym_convert(b(kSymM, {1}), Basis::e) == b(kSymE, {1}));
}

TEST_CASE("sym_expand matches the oracle")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions_of(n))
            for (Space s : kSpaces)
                CHECK(oracle::from_multipoly(sym_expand(b(s, lam.parts()), 3)) == oracle::sym_poly(b(s, lam.parts()), 3));
}

TEST_CASE("coproduct and antipode")
{
    CHECK(sym_coproduct(b(kSymE, {2})) == Tensor::of({b(kSymE, {2}), Element::one(kSymE)}) +
                                              Tensor::of({b(kSymE, {1}), b(kSymE, {1})}) +
                                              Tensor::of({Element::one(kSymE), b(kSymE, {2})}));
    CHECK(sym_antipode(b(kSymE, {2})) == b(kSymE, {1, 1}) - b(kSymE, {2}));
    for (int n = 1; n <= 8; ++n) {
        const Element chi = sym_antipode(b(kSymE, {n}));
        const Element h = b(kSymH, {n}) * Scalar(n % 2 ? -1 : 1);
        CHECK(sym_equal(chi, h));
    }
}

TEST_CASE("Hall inner product")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& c : partitions_of(n))
                CHECK(hall_pair(b(kSymH, a.parts()), b(kSymM, c.parts())) == Scalar(a == c ? 1 : 0));
    CHECK(hall_pair(b(kSymE, {2}), b(kSymM, {1, 1})) == Scalar(1));
    // p_lambda are orthogonal with norm z_lambda
    CHECK(hall_pair(b(kSymP, {1, 1}), b(kSymP, {1, 1})) == Scalar(2));
    CHECK(hall_pair(b(kSymP, {2}), b(kSymP, {2})) == Scalar(2));
}

TEST_CASE("involutions")
{
    CHECK(sym_equal(sym_involution(b(kSymE, {2}), SymInvolution::omega), b(kSymH, {2})));
    CHECK(sym_equal(sym_involution(b(kSymE, {3}), SymInvolution::dual), b(kSymE, {3}) * Scalar(-1)));
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            const Element x = b(kSymE, lam.parts());
            CHECK(sym_equal(sym_involution(sym_involution(x, SymInvolution::omega), SymInvolution::omega), x));
            CHECK(sym_equal(sym_involution(x, SymInvolution::whitney), sym_antipode(x)));
            CHECK(sym_equal(sym_involution(x, SymInvolution::omega),
                            sym_involution(sym_involution(x, SymInvolution::dual), SymInvolution::whitney)));
        }
}

TEST_CASE("sym_from_polynomial inverts sym_expand")
{
    for (const auto& lam : partitions_of(4)) {
        const Element m = b(kSymM, lam.parts());
        CHECK(sym_equal(sym_from_polynomial(sym_expand(m, 4)), m));
    }
}
