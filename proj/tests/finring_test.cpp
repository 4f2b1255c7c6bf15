#include <gtest/gtest.h>

#include "support.hpp"

using namespace qspec;

TEST(FiniteRing, ZmodTablesAndCanonicalOrder) {
    auto r = make_zmod(12);
    EXPECT_EQ(r->size(), 12u);
    EXPECT_EQ(r->name(r->zero()), "0");
    EXPECT_EQ(r->name(r->one()), "1");
    EXPECT_TRUE(r->axioms_verified());
    for (Elem a = 0; a < 12; ++a)
        for (Elem b = 0; b < 12; ++b) {
            EXPECT_EQ(r->add(a, b), (a + b) % 12);
            EXPECT_EQ(r->mul(a, b), (a * b) % 12);
        }
    EXPECT_EQ(r->neg(5), 7u);
    EXPECT_EQ(r->pow(2, 3), 8u);
    EXPECT_EQ(r->pow(5, 0), r->one());
}

TEST(FiniteRing, ZeroAndTrivialModuliRejected) {
    EXPECT_THROW(make_zmod(1), DomainError);
    EXPECT_THROW(make_zmod(0), DomainError);
    Limits small;
    small.max_ring_size = 16;
    EXPECT_THROW(make_zmod(17, small), SizingError);
    EXPECT_NO_THROW(make_zmod(16, small));
}

TEST(FiniteRing, UnitsNilpotentsIdempotents) {
    auto r = make_zmod(12);
    EXPECT_TRUE(r->is_unit(5));
    EXPECT_FALSE(r->is_unit(4));
    EXPECT_TRUE(r->is_nilpotent(6));
    EXPECT_FALSE(r->is_nilpotent(4));
    EXPECT_EQ(idempotents(*r), (std::vector<Elem>{0, 1, 4, 9}));
    EXPECT_EQ(idempotents(*make_zmod(6)), (std::vector<Elem>{0, 1, 3, 4}));
}

TEST(FiniteRing, IdempotentCountIsTwoToTheNumberOfPrimeFactors) {
    for (std::uint64_t n = 2; n <= 64; ++n)
        EXPECT_EQ(idempotents(*make_zmod(n)).size(), std::size_t{1} << qtest::factor(n).size()) << n;
}

TEST(FiniteRing, ProductIsComponentwise) {
    auto r = make_product(make_zmod(2), make_zmod(3));
    EXPECT_EQ(r->size(), 6u);
    EXPECT_EQ(r->name(r->zero()), "(0,0)");
    EXPECT_EQ(r->name(r->one()), "(1,1)");
    const Elem a = r->parse_element("(1,2)");
    const Elem b = r->parse_element("(1,2)");
    EXPECT_EQ(r->name(r->mul(a, b)), "(1,1)");
    EXPECT_EQ(r->name(r->add(a, b)), "(0,1)");
    EXPECT_EQ(idempotents(*r).size(), 4u);
}

TEST(FiniteRing, GaloisFieldOfFourElements) {
    auto r = qtest::ring("PolyQuot(Zmod(2),x,x^2+x+1)");
    ASSERT_EQ(r->size(), 4u);
    for (Elem a = 1; a < 4; ++a) EXPECT_TRUE(r->is_unit(a)) << r->name(a);
    const Elem x = r->parse_element("x");
    EXPECT_EQ(r->mul(x, x), r->parse_element("x+1"));
    EXPECT_EQ(r->pow(x, 3), r->one());
}

TEST(FiniteRing, DualNumbersHaveNilpotentVariable) {
    auto r = qtest::ring("PolyQuot(Zmod(2),x,x^2)");
    const Elem x = r->parse_element("x");
    EXPECT_TRUE(r->is_nilpotent(x));
    EXPECT_EQ(r->mul(x, x), r->zero());
    EXPECT_TRUE(r->is_unit(r->parse_element("x+1")));
}

TEST(FiniteRing, NestedPolynomialRingHasSixteenElements) {
    auto r = qtest::ring("PolyQuot(PolyQuot(Zmod(2),x,x^2),y,y^2)");
    EXPECT_EQ(r->size(), 16u);
    const Elem xy = r->mul(r->parse_element("(x)*y"), r->one());
    EXPECT_TRUE(r->is_nilpotent(xy));
    EXPECT_EQ(r->parse_element("(x+1)*y+x"), r->add(r->mul(r->parse_element("x+1"), r->parse_element("y")), r->parse_element("x")));
}

TEST(FiniteRing, NonMonicModulusRejected) {
    auto z2 = make_zmod(4);
    EXPECT_THROW(make_poly_quotient(z2, "x", {0, 0, 2}), DomainError);
    EXPECT_THROW(qtest::ring("PolyQuot(Zmod(4),x,2*x^2+1)"), DomainError);
}

TEST(FiniteRing, ElementNamesRoundTripOnBattery) {
    for (const auto& expr : qtest::battery_exprs()) {
        auto r = qtest::ring(expr);
        for (Elem a = 0; a < r->size(); ++a) EXPECT_EQ(r->parse_element(r->name(a)), a) << expr << " " << r->name(a);
    }
}

TEST(FiniteRing, DecimalLiteralsReduceAndJunkIsRejected) {
    auto r = make_zmod(5);
    EXPECT_EQ(r->parse_element("7"), 2u);  // decimal literals reduce mod n
    EXPECT_THROW(r->parse_element("-1"), ParseError);
    EXPECT_THROW(r->parse_element("x"), ParseError);
}

TEST(FiniteRing, BrokenTablesFailAxiomScan) {
    FiniteRing::Tables t;
    t.size = 2;
    t.add = {0, 1, 1, 0};
    t.mul = {0, 0, 0, 0};  // 1 * 1 = 0: no identity
    t.zero = 0;
    t.one = 1;
    t.names = {"0", "1"};
    EXPECT_THROW(FiniteRing::build(t, Recipe{}), DomainError);
}

TEST(FiniteRing, DuplicateNamesRejected) {
    FiniteRing::Tables t;
    t.size = 2;
    t.add = {0, 1, 1, 0};
    t.mul = {0, 0, 0, 1};
    t.zero = 0;
    t.one = 1;
    t.names = {"a", "a"};
    EXPECT_THROW(FiniteRing::build(t, Recipe{}), DomainError);
}

TEST(RingHomomorphism, IdentityAndProjectionAreHomomorphisms) {
    auto r = make_zmod(12);
    EXPECT_FALSE(RingHom::identity(r).find_violation());
    auto z4 = make_zmod(4);
    std::vector<Elem> m(12);
    for (Elem a = 0; a < 12; ++a) m[a] = a % 4;
    EXPECT_NO_THROW(RingHom(r, z4, m));
}

TEST(RingHomomorphism, NonHomomorphismRejected) {
    auto r = make_zmod(6);
    std::vector<Elem> m(6);
    for (Elem a = 0; a < 6; ++a) m[a] = a % 5;  // not additive mod 5
    EXPECT_THROW(RingHom(r, make_zmod(5), m), DomainError);
}

TEST(Localization, AtTwoInZmod6) {
    auto r = make_zmod(6);
    auto loc = localize_at(r, 2);
    ASSERT_TRUE(loc);
    EXPECT_EQ(loc->idempotent, 4u);
    EXPECT_EQ(loc->ring->size(), 3u);
    EXPECT_FALSE(loc->map.find_violation());
    // the image of f is a unit
    EXPECT_TRUE(loc->ring->is_unit(loc->map(2)));
}

TEST(Localization, NilpotentGivesZeroRing) {
    auto r = make_zmod(8);
    EXPECT_FALSE(localize_at(r, 4));
    auto full = localize_at(r, 3);
    ASSERT_TRUE(full);
    EXPECT_EQ(full->ring->size(), 8u);
}

TEST(FiniteRingProperty, RandomExpressionsSatisfyAxioms) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        int vars = 0;
        const auto e = qtest::random_ring_expr(rng, 2, vars);
        auto r = evaluate(e);
        ASSERT_TRUE(r->axioms_verified()) << pretty(e);
        EXPECT_FALSE(r->find_axiom_violation()) << pretty(e);
        for (Elem a = 0; a < r->size(); ++a) EXPECT_EQ(r->parse_element(r->name(a)), a) << pretty(e);
    }
}
