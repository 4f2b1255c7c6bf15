#include <gtest/gtest.h>

#include "support.hpp"

using namespace qspec;

namespace {

std::size_t error_position(const std::string& src) {
    try {
        parse_ring(src);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for " << src;
    return 0;
}

}  // namespace

TEST(Grammar, ParsesEachConstructor) {
    const auto z = parse_ring("Zmod(8)");
    EXPECT_EQ(z.kind, RingExpr::Kind::zmod);
    EXPECT_EQ(z.modulus, 8u);
    const auto p = parse_ring(" Prod( Zmod(2) , Zmod(3) ) ");
    ASSERT_EQ(p.children.size(), 2u);
    EXPECT_EQ(pretty(p), "Prod(Zmod(2),Zmod(3))");
    const auto q = parse_ring("PolyQuot(Zmod(2),x,x^2+x+1)");
    EXPECT_EQ(q.var, "x");
    EXPECT_EQ(q.poly, (std::vector<text::PolyTerm>{{"", 2}, {"", 1}, {"1", 0}}));
    const auto l = parse_ring("Quot(Zmod(12),[4, 6])");
    EXPECT_EQ(l.literals, (std::vector<std::string>{"4", "6"}));
}

TEST(Grammar, ErrorsCarrySourcePositions) {
    EXPECT_EQ(error_position("Zmud(8)"), 0u);
    EXPECT_EQ(error_position("Zmod(x)"), 5u);
    EXPECT_EQ(error_position("Zmod(8"), 6u);
    EXPECT_EQ(error_position("Prod(Zmod(2) Zmod(3))"), 13u);
    EXPECT_EQ(error_position("Zmod(8) extra"), 8u);
    EXPECT_EQ(error_position("PolyQuot(Zmod(2),I,I^2)"), 17u);
    EXPECT_THROW(parse_ring(""), ParseError);
    EXPECT_THROW(parse_ring("Quot(Zmod(4),[2,])"), ParseError);
}

TEST(Semantics, Examples) {
    EXPECT_EQ(parse_and_evaluate("Zmod(8)")->size(), 8u);
    auto gf4 = parse_and_evaluate("Quot(PolyQuot(Zmod(2),x,x^2+x+1),[0])");
    EXPECT_EQ(gf4->size(), 4u);
    for (Elem a = 1; a < 4; ++a) EXPECT_TRUE(gf4->is_unit(a));
    EXPECT_EQ(parse_and_evaluate("Quot(Zmod(12),[4])")->size(), 4u);
    EXPECT_EQ(parse_and_evaluate("Prod(Zmod(4),PolyQuot(Zmod(3),t,t^2))")->size(), 36u);
}

TEST(Semantics, Rejections) {
    EXPECT_THROW(parse_and_evaluate("Zmod(1)"), DomainError);
    EXPECT_THROW(parse_and_evaluate("Zmod(0)"), DomainError);
    EXPECT_THROW(parse_and_evaluate("PolyQuot(Zmod(4),x,2*x^2+1)"), DomainError);
    EXPECT_THROW(parse_and_evaluate("PolyQuot(PolyQuot(Zmod(2),x,x^2),x,x^2)"), DomainError);
    EXPECT_THROW(parse_and_evaluate("Quot(Zmod(6),[5])"), DomainError);
    EXPECT_EQ(parse_and_evaluate("Quot(Zmod(6),[9])")->size(), 3u);
    EXPECT_THROW(parse_and_evaluate("Quot(Zmod(6),[y])"), ParseError);
    Limits l;
    l.max_ring_size = 100;
    EXPECT_THROW(parse_and_evaluate("Prod(Zmod(20),Zmod(20))", l), SizingError);
    EXPECT_THROW(parse_and_evaluate("PolyQuot(Zmod(11),x,x^2)", l), SizingError);
}

TEST(Semantics, CompoundCoefficientsInNestedPolynomials) {
    auto r = parse_and_evaluate("PolyQuot(PolyQuot(Zmod(2),x,x^2),y,y^2+(x+1)*y+x)");
    EXPECT_EQ(r->size(), 16u);
    EXPECT_TRUE(r->axioms_verified());
}

TEST(Grammar, PrettyParseRoundTrip) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        int vars = 0;
        const auto e = qtest::random_ring_expr(rng, 3, vars);
        EXPECT_EQ(parse_ring(pretty(e)), e) << pretty(e);
    }
}

TEST(Grammar, BatteryRoundTrip) {
    for (const auto& expr : qtest::battery_exprs()) EXPECT_EQ(pretty(parse_ring(expr)), expr);
}
