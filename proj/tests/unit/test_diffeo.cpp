#include "doctest.h"

#include "chopf/diffeo.hpp"
#include "chopf/errors.hpp"
#include "chopf/series.hpp"
#include "chopf/sym.hpp"

using namespace chopf;

namespace {

Element t(Word w) { return Element::basis(kFdB, std::move(w)); }
Element z(Word w) { return Element::basis(kNSym, std::move(w)); }
Element e(Word w) { return Element::basis(kSymE, std::move(w)); }
Tensor tt(const Element& a, const Element& b) { return Tensor::of({a, b}); }

} // namespace

TEST_CASE("Faa di Bruno coproduct and antipode")
{
    const Element one = Element::one(kFdB);
    CHECK(fdb_coproduct(t({2})) == tt(t({2}), one) + tt(t({1}), t({1})) * Scalar(2) + tt(one, t({2})));
    CHECK(fdb_antipode(t({2})) == t({1, 1}) * Scalar(2) - t({2}));
    CHECK(fdb_antipode(t({3})) == t({1, 1, 1}) * Scalar(-5) + t({2, 1}) * Scalar(5) - t({3}));
}

TEST_CASE("antipode coefficients are those of the reverted series")
{
    const int cap = 9;
    const Series g = ps_revert(fdb_generic_series(kFdB, cap));
    for (int n = 1; n <= 8; ++n)
        CHECK(fdb_antipode(t({n})) == g.coefficient(n + 1));
}

TEST_CASE("beta words are outside the Faa di Bruno structure")
{
    CHECK_THROWS_AS(fdb_coproduct(Element::basis(kFdBb, {0})), DomainError);
}

TEST_CASE("BFK coproduct")
{
    const Element one = Element::one(kNSym);
    CHECK(bfk_coproduct(z({2})) == tt(z({2}), one) + tt(z({1}), z({1})) * Scalar(2) + tt(one, z({2})));
    CHECK(bfk_coproduct(z({3})) == tt(z({3}), one) + tt(z({2}), z({1})) * Scalar(3) + tt(z({1}), z({2})) * Scalar(2) +
                                       tt(z({1}), z({1, 1})) + tt(one, z({3})));
    // not cocommutative
    const Tensor d = bfk_coproduct(z({3}));
    CHECK(d != swap_adjacent(d, 0));
}

TEST_CASE("BFK antipode")
{
    CHECK(bfk_antipode(z({3})) == z({1, 1, 1}) * Scalar(-5) + z({1, 2}) * Scalar(2) + z({2, 1}) * Scalar(3) - z({3}));
    for (int n = 1; n <= 6; ++n)
        CHECK(bfk_abelianize(bfk_antipode(z({n}))) == fdb_antipode(t({n})));
}

TEST_CASE("abelianizing BFK gives Faa di Bruno")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : compositions_of(n)) {
            const Tensor d = bfk_coproduct(z(c.parts()));
            const Tensor ab = map_factor(map_factor(d, 0, [](const Word& w) { return bfk_abelianize(z(w)); }), 1,
                                         [](const Word& w) { return bfk_abelianize(z(w)); });
            CHECK(ab == fdb_coproduct(bfk_abelianize(z(c.parts()))));
        }
}

TEST_CASE("coaction on S*")
{
    CHECK(coaction_sym(e({2})) == tt(e({2}), Element::one(kFdB)) + tt(e({1}), t({1})));
    CHECK(coaction_sym(e({3})) == tt(e({3}), Element::one(kFdB)) + tt(e({2}), t({1})) * Scalar(2) + tt(e({1}), t({2})));
    // multiplicative
    CHECK(coaction_sym(e({2, 1})) == multiply_adjacent(multiply_adjacent(swap_adjacent(tensor(coaction_sym(e({2})), coaction_sym(e({1}))), 1), 0), 1));
}
