#include "doctest.h"

#include "chopf/nsym.hpp"
#include "chopf/sym.hpp"
#include "oracles.hpp"

using namespace chopf;

namespace {

Element z(Word w) { return Element::basis(kNSym, std::move(w)); }
Element m(Word w) { return Element::basis(kQSym, std::move(w)); }

} // namespace

TEST_CASE("binomial coproduct and antipode on N*")
{
    CHECK(nsym_binomial_coproduct(z({2})) == Tensor::of({z({2}), Element::one(kNSym)}) + Tensor::of({z({1}), z({1})}) +
                                                 Tensor::of({Element::one(kNSym), z({2})}));
    CHECK(nsym_binomial_antipode(z({2})) == z({1, 1}) - z({2}));
    CHECK(nsym_binomial_antipode(z({3})) == z({1, 2}) + z({2, 1}) - z({1, 1, 1}) - z({3}));
    // antimorphism
    CHECK(nsym_binomial_antipode(z({1, 2})) == nsym_binomial_antipode(z({2})) * nsym_binomial_antipode(z({1})));
}

TEST_CASE("quasi-shuffle equals the product of ordered-variable expansions")
{
    for (int wa = 1; wa <= 3; ++wa)
        for (int wb = 1; wb <= 5 - wa; ++wb)
            for (const auto& a : compositions_of(wa))
                for (const auto& c : compositions_of(wb)) {
                    const int vars = wa + wb;
                    const auto lhs = oracle::qsym_poly(quasi_shuffle(a, c), vars);
                    const auto rhs = oracle::poly_mul(oracle::monomial_qsym_poly(a.parts(), vars),
                                                      oracle::monomial_qsym_poly(c.parts(), vars));
                    CHECK(lhs == rhs);
                }
    CHECK(m({1}) * m({2}) == m({1, 2}) + m({2, 1}) + m({3}));
}

TEST_CASE("qsym_expand matches the oracle")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : compositions_of(n))
            CHECK(oracle::from_multipoly(qsym_expand(m(c.parts()), 4)) == oracle::monomial_qsym_poly(c.parts(), 4));
}

TEST_CASE("Q* antipode matches the closed form")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : compositions_of(n))
            CHECK(qsym_antipode(m(c.parts())) == oracle::qsym_antipode_closed_form(c.parts()));
}

TEST_CASE("deconcatenation coproduct")
{
    CHECK(qsym_coproduct(m({1, 2})) == Tensor::of({m({1, 2}), Element::one(kQSym)}) + Tensor::of({m({1}), m({2})}) +
                                            Tensor::of({Element::one(kQSym), m({1, 2})}));
}

TEST_CASE("pairing and its adjunctions")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : compositions_of(n))
            for (const auto& c : compositions_of(n))
                CHECK(ns_qs_pair(z(a.parts()), m(c.parts())) == Scalar(a == c ? 1 : 0));
    CHECK(ns_qs_pair(z({2}), m({1}) * m({1})) == Scalar(1));
    for (const auto& a : compositions_of(2))
        for (const auto& c : compositions_of(1))
            for (const auto& k : compositions_of(3)) {
                const Scalar lhs = ns_qs_pair(z(a.parts()) * z(c.parts()), m(k.parts()));
                const Scalar rhs = ns_qs_pair(Tensor::of({z(a.parts()), z(c.parts())}), qsym_coproduct(m(k.parts())));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("abelianization and inclusion")
{
    CHECK(abelianize_nsym(z({1, 2})) == Element::basis(kSymE, {2, 1}));
    CHECK(abelianize_nsym(z({2, 1})) == Element::basis(kSymE, {2, 1}));
    CHECK(include_sym_in_qsym(Element::basis(kSymM, {2, 1})) == m({1, 2}) + m({2, 1}));
    CHECK(include_sym_in_qsym(Element::basis(kSymE, {2})) == m({1, 1}));
    // inclusion preserves the polynomial
    for (const auto& lam : partitions_of(4)) {
        const Element x = Element::basis(kSymH, lam.parts());
        CHECK(oracle::qsym_poly(include_sym_in_qsym(x), 4) == oracle::sym_poly(x, 4));
    }
}
