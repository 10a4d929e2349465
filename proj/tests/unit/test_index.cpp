#include "doctest.h"

#include <algorithm>
#include <set>

#include "chopf/element.hpp"
#include "chopf/errors.hpp"
#include "chopf/index.hpp"
#include "chopf/scalar.hpp"
#include "oracles.hpp"

using namespace chopf;

TEST_CASE("compositions and partitions of small weights")
{
    const auto c3 = compositions_of(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == Composition{3});
    CHECK(c3[1] == Composition{2, 1});
    CHECK(c3[2] == Composition{1, 2});
    CHECK(c3[3] == Composition{1, 1, 1});
    CHECK(compositions_of(0).size() == 1);
    CHECK(compositions_of(0)[0].empty());

    const auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == Partition{4});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
}

TEST_CASE("enumeration agrees with the brute-force lists")
{
    for (int n = 0; n <= 10; ++n) {
        std::set<oracle::Word> lib;
        for (const auto& c : compositions_of(n))
            lib.insert(c.parts());
        const auto ref = oracle::all_compositions(n);
        CHECK(lib == std::set<oracle::Word>(ref.begin(), ref.end()));
        CHECK(compositions_of(n).size() == (n == 0 ? 1u : 1u << (n - 1)));

        std::set<oracle::Word> plib;
        for (const auto& p : partitions_of(n))
            plib.insert(p.parts());
        const auto pref = oracle::all_partitions(n);
        CHECK(plib == std::set<oracle::Word>(pref.begin(), pref.end()));
    }
}

TEST_CASE("enumeration order is strictly descending")
{
    for (int n = 1; n <= 8; ++n) {
        const auto c = compositions_of(n);
        CHECK(std::is_sorted(c.begin(), c.end(), std::greater<>()));
        CHECK(std::adjacent_find(c.begin(), c.end()) == c.end());
    }
}

TEST_CASE("index validation")
{
    CHECK_THROWS_AS(Composition({2, 0}), DomainError);
    CHECK_THROWS_AS(Partition({1, 0}), DomainError);
    CHECK(Partition({1, 2}) == Partition{2, 1});
    CHECK(concat(Composition{1, 1}, Composition{2, 3}) == Composition{1, 1, 2, 3});
    CHECK(concat(Composition{}, Composition{2}) == Composition{2});
    CHECK(sort_to_partition(Composition{1, 2}) == Partition{2, 1});
    CHECK(Composition({1, 2, 3}).reversed() == Composition{3, 2, 1});
}

TEST_CASE("coarsenings match the oracle")
{
    for (const auto& c : compositions_of(5)) {
        std::set<oracle::Word> lib;
        for (const auto& d : coarsenings(c))
            lib.insert(d.parts());
        const auto ref = oracle::adjacent_coarsenings(c.parts());
        CHECK(lib == std::set<oracle::Word>(ref.begin(), ref.end()));
    }
}

TEST_CASE("scalars normalise")
{
    CHECK(Scalar::parse("6/4").str() == "3/2");
    CHECK(Scalar::parse("-2/4").str() == "-1/2");
    CHECK(Scalar::parse("4/2").is_integer());
    CHECK_THROWS_AS(Scalar::parse("1/0"), DomainError);
    CHECK(binomial(5, 2) == Scalar(10));
    CHECK(factorial(6) == Scalar(720));
}

TEST_CASE("element arithmetic in the free and commutative algebras")
{
    const Element z11 = Element::basis(kNSym, {1, 1});
    const Element z23 = Element::basis(kNSym, {2, 3});
    CHECK(z11 * z23 == Element::basis(kNSym, {1, 1, 2, 3}));
    CHECK(Element::basis(kNSym, {2}) * Element::basis(kNSym, {1}) != Element::basis(kNSym, {1}) * Element::basis(kNSym, {2}));
    CHECK(Element::basis(kSymE, {1}) * Element::basis(kSymE, {2}) == Element::basis(kSymE, {2, 1}));
    CHECK((Element::basis(kSymE, {1}) - Element::basis(kSymE, {1})).is_zero());
    CHECK(Element::basis(kNSym, {2}).str() == "Z[2]");
    CHECK((Element::basis(kSymE, {1, 1}) - Element::basis(kSymE, {2})).str() == "e[1,1] - e[2]");
}
