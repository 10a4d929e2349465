#include "doctest.h"

#include "chopf/diffeo.hpp"
#include "chopf/errors.hpp"
#include "chopf/nsym.hpp"
#include "chopf/topology.hpp"
#include "oracles.hpp"

using namespace chopf;

namespace {

Element bb(Word w) { return Element::basis(kFdBb, std::move(w)); }

} // namespace

TEST_CASE("Miscenko logarithm")
{
    const Series log = miscenko_log(8);
    CHECK(log.coefficient(1) == Element::one(kFdBb));
    CHECK(log.coefficient(2) == bb({1}) * Scalar(-1));
    CHECK(log.coefficient(3) == bb({1, 1}) * Scalar(2) - bb({2}));
    CHECK(ps_compose(b_series(8), log) == Series::variable(kFdBb, 1, 8));
    for (int n = 1; n <= 7; ++n)
        CHECK(log.coefficient(n + 1) == fdb_antipode(bb({n})));
}

TEST_CASE("Hurewicz image of CP^n")
{
    CHECK(cp_hurewicz(1) == bb({1}) * Scalar(-2));
    CHECK(cp_hurewicz(2) == bb({1, 1}) * Scalar(6) - bb({2}) * Scalar(3));
    for (int n = 1; n <= 6; ++n)
        CHECK(cp_hurewicz(n) == fdb_antipode(bb({n})) * Scalar(n + 1));
}

TEST_CASE("characteristic numbers of CP^n against the normal-bundle oracle")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            const Scalar expected(mpq_class(oracle::normal_bundle_number(n, lam.parts())));
            CHECK(cp_char_number(n, lam) == expected);
            CHECK(cp_normal_char_number(n, lam) == expected);
        }
    CHECK(cp_char_number(2, Partition{1, 1}) == Scalar(6));
    CHECK(cp_char_number(2, Partition{2}) == Scalar(-3));
    CHECK_THROWS_AS(cp_char_number(3, Partition{2}), DomainError);
}

TEST_CASE("formal group law")
{
    const Series f = fgl(5);
    CHECK(ps_set_zero(f, 1) == Series::variable(kFdBb, 1, 5));
    CHECK(ps_set_zero(f, 0) == Series::variable(kFdBb, 1, 5));
    CHECK(f.coefficient({1, 1}) == bb({1}) * Scalar(2));
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j)
            CHECK(f.coefficient({i, j}) == f.coefficient({j, i}));
}

TEST_CASE("beta series")
{
    const Series s = beta_series(3);
    CHECK(s.coefficient(0) == Element::one(kFdBb));
    CHECK(s.coefficient(1) == beta_element());
}

TEST_CASE("quasitoric numbers")
{
    ProjectiveProductSpace cp1{{1}, {{1}, {1}}};
    CHECK(quasitoric_char_number(cp1, Composition{1}) == Scalar(2));
    ProjectiveProductSpace p11{{1, 1}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}};
    CHECK(quasitoric_char_number(p11, Composition{1, 1}) == Scalar(4));
    CHECK(quasitoric_char_number(p11, Composition{2}) == Scalar(0));
    // the quasitoric normal convention carries (-1)^|I| on top of cp_char_number
    for (int n = 1; n <= 3; ++n) {
        ProjectiveProductSpace cp{{n}, std::vector<std::vector<int>>(n + 1, std::vector<int>{1})};
        for (const auto& lam : partitions_of(n)) {
            Element m = include_sym_in_qsym(Element::basis(kSymM, lam.parts()));
            Scalar normal;
            for (const auto& [w, c] : m.terms())
                normal += c * quasitoric_char_number(cp, Composition(w), CharConvention::normal);
            CHECK(normal == cp_char_number(n, lam) * Scalar(n % 2 ? -1 : 1));
        }
    }
    ProjectiveProductSpace bad{{1}, {{1, 0}}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("crn invariants and the cumulant series")
{
    for (int k = 1; k <= 8; ++k) {
        const Element c = crn_invariant(k);
        CHECK(c.size() == (1u << (k - 1)));
        for (const auto& [w, s] : c.terms())
            CHECK(s == Scalar(1));
    }
    const Series cum = cumulant_series(3);
    CHECK(cum.coefficient(1) == Element::one(kNSym) * Scalar(-1));
    CHECK(cum.coefficient(3) == Element::basis(kNSym, {1, 1}) * Scalar(-2) + Element::basis(kNSym, {2}));
}

TEST_CASE("cp-infinity coproduct abelianizes to the formal group law")
{
    const int cap = 5;
    const Series d = cp_infinity_coproduct(cap);
    const Series ab = ps_map(d, kFdBb, [](const Element& x) { return bfk_abelianize(x, Basis::b); });
    CHECK(ab == fgl(cap));
}
