#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcrank/qexpr.hpp"

using namespace kcrank;

TEST_CASE("parse shapes") {
    SUBCASE("1/((-q;q)^2)") {
        ExprPtr e = parse("1/((-q;q)^2)");
        const auto* div = std::get_if<DivNode>(&e->node);
        REQUIRE(div);
        const auto* one = std::get_if<IntLiteral>(&div->num->node);
        REQUIRE(one);
        CHECK(one->value == 1);
        const auto* pw = std::get_if<PowerNode>(&div->den->node);
        REQUIRE(pw);
        CHECK(pw->exponent == 2);
        const auto* poch = std::get_if<PochTerm>(&pw->base->node);
        REQUIRE(poch);
        CHECK(poch->sign == -1);
        CHECK(poch->a == 1);
        CHECK(poch->b == 1);
    }
    SUBCASE("(q;q^3)*(q^2;q^3)") {
        ExprPtr e = parse("(q;q^3)*(q^2;q^3)");
        const auto* mul = std::get_if<MulNode>(&e->node);
        REQUIRE(mul);
        REQUIRE(mul->factors.size() == 2);
        const auto* p0 = std::get_if<PochTerm>(&mul->factors[0]->node);
        const auto* p1 = std::get_if<PochTerm>(&mul->factors[1]->node);
        REQUIRE(p0);
        REQUIRE(p1);
        CHECK(p0->a == 1);
        CHECK(p0->b == 3);
        CHECK(p1->a == 2);
        CHECK(p1->b == 3);
    }
    SUBCASE("bare q is not a factor") {
        try {
            parse("J(12,27)/J(3) - q*J(6,27)/J(3)");
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(e.offset == 16);  // position of the bare q
        }
        CHECK_THROWS_AS(parse("q"), SyntaxError);
    }
    SUBCASE("whitespace insensitivity") {
        CHECK(structurally_equal(*parse("J(1) / J(3)"), *parse("J(1)/J(3)")));
        CHECK(structurally_equal(*parse(" ( q ; q ^ 3 ) "), *parse("(q;q^3)")));
    }
    SUBCASE("malformed inputs carry offsets") {
        CHECK_THROWS_AS(parse(""), SyntaxError);
        CHECK_THROWS_AS(parse("(q;q"), SyntaxError);
        CHECK_THROWS_AS(parse("J(3"), SyntaxError);
        CHECK_THROWS_AS(parse("1+"), SyntaxError);
        CHECK_THROWS_AS(parse("(q^0;q)"), SyntaxError);
        CHECK_THROWS_AS(parse("1)"), SyntaxError);
    }
}

TEST_CASE("evaluate") {
    CHECK(evaluate(parse("1/((-q;q)^2)"), 4) == QSeries::of({1, -2, 1, -2, 4}));
    // hand expansion of (1-q)(1-q^2)(1-q^4)(1-q^5): the -1 sits at q^4, the
    // first zero at q^5
    CHECK(evaluate(parse("(q;q^3)*(q^2;q^3)"), 5) == QSeries::of({1, -1, -1, 1, -1, 0}));
    // alpha series: half the sum of the two parity products
    CHECK(evaluate(parse("((1/((-q;q)^2)) + ((q^2;q^4)))/2"), 3) ==
          QSeries::of({1, -1, 0, -1}));
    CHECK(evaluate(parse("(q;q)^0"), 5) == QSeries::unit(5));
    CHECK(evaluate(parse("3"), 2) == QSeries::of({3, 0, 0}));
    CHECK(evaluate(parse("2^3"), 0) == QSeries::of({8}));
    CHECK(evaluate(parse("((q;q)+(q;q))/2"), 12) == j_product(1, 12));
}

TEST_CASE("evaluate error propagation") {
    CHECK_THROWS_AS(evaluate(parse("1/((q;q)+(q;q))"), 5), NonUnitConstantError);
    CHECK_THROWS_AS(evaluate(parse("(q;q)/2"), 5), NotDivisibleError);
    CHECK_THROWS_AS(evaluate(parse("J(3,3)"), 5), BadModuliError);
    CHECK_THROWS_AS(evaluate(parse("J(5,2)"), 5), BadModuliError);
    CHECK_THROWS_AS(evaluate(parse("1/0"), 5), Error);
}

TEST_CASE("print round trip") {
    const char* inputs[] = {
        "1/((-q;q)^2)",
        "(q;q^3)*(q^2;q^3)",
        "((1/((-q;q)^2)) + ((q^2;q^4)))/2",
        "J(12,27)/J(3)",
        "J(1)/J(3) - J(2)*J(4)^2 + 7",
        "(q;q)^-1",
        "(-q^2;q^4)^3/(q;q^2)",
        "1/(q;q)/(q^2;q^2)",
        "2*(q;q)*J(2,5)",
    };
    for (const char* text : inputs) {
        CAPTURE(text);
        ExprPtr first = parse(text);
        std::string printed = print(first);
        ExprPtr second = parse(printed);
        CHECK(structurally_equal(*first, *second));
        CHECK(print(second) == printed);
    }
}

TEST_CASE("the opening identity of the mod-3 section") {
    // J_1/J_3 = (q;q^3)(q^2;q^3) as series, checked at full depth
    QSeries lhs = evaluate(parse("J(1)/J(3)"), 200);
    QSeries rhs = evaluate(parse("(q;q^3)*(q^2;q^3)"), 200);
    CHECK(lhs == rhs);
}
