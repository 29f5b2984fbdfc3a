#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fplab/expression.hpp"

using namespace fplab;

namespace {

FpSet make(std::uint32_t p, std::vector<std::uint32_t> elems) {
    return FpSet::from_elements(PrimeField(p), elems);
}

}  // namespace

TEST_CASE("parser accepts the theorem expressions") {
    auto e1 = SumExpression::parse("(A-A)^2 x5");
    REQUIRE(e1.terms.size() == 1);
    CHECK(e1.terms[0].difference);
    CHECK(e1.terms[0].squared);
    CHECK(e1.terms[0].repeat == 5);

    auto e2 = SumExpression::parse("(A-A)^2 + A^2 x4");
    REQUIRE(e2.terms.size() == 2);
    CHECK(e2.terms[0].difference);
    CHECK(!e2.terms[1].difference);
    CHECK(e2.terms[1].repeat == 4);

    auto e3 = SumExpression::parse("  A-A ^2x2 +A^2x4 ");
    REQUIRE(e3.terms.size() == 2);
    CHECK(e3.terms[0].repeat == 2);

    // UTF-8 minus and multiplication signs are tolerated
    auto e4 = SumExpression::parse("(A\xE2\x88\x92""A)^2 \xC3\x97""5");
    CHECK(e4.terms[0].difference);
    CHECK(e4.terms[0].repeat == 5);

    CHECK(SumExpression::parse("A").terms.size() == 1);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(SumExpression::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(SumExpression::parse("B"), std::invalid_argument);
    CHECK_THROWS_AS(SumExpression::parse("A^3"), std::invalid_argument);
    CHECK_THROWS_AS(SumExpression::parse("A+"), std::invalid_argument);
    CHECK_THROWS_AS(SumExpression::parse("A x0"), std::invalid_argument);
    CHECK_THROWS_AS(SumExpression::parse("(A-A"), std::invalid_argument);
    CHECK_THROWS_AS(SumExpression::parse("A xx3"), std::invalid_argument);
}

TEST_CASE("round trip through str()") {
    for (auto text : {"(A-A)^2 x5", "(A-A)^2 + A^2 x4", "A", "A-A + A^2"}) {
        auto e = SumExpression::parse(text);
        CHECK(SumExpression::parse(e.str()).str() == e.str());
    }
}

TEST_CASE("evaluate_expression examples") {
    auto a = make(7, {0, 1});
    CHECK(evaluate_expression(a, SumExpression::parse("(A-A)^2 x5")) ==
          make(7, {0, 1, 2, 3, 4, 5}));

    auto b = make(11, {2, 5, 7});
    CHECK(evaluate_expression(b, SumExpression::parse("A")) == b);

    auto c = make(5, {0, 1, 2});
    CHECK(evaluate_expression(c, SumExpression::parse("(A-A)^2 + A^2 x4")) ==
          FpSet::full(PrimeField(5)));

    CHECK_THROWS_AS(evaluate_expression(FpSet(PrimeField(7)), SumExpression::parse("A")),
                    std::invalid_argument);
}

TEST_CASE("coverage examples") {
    auto full = FpSet::full(PrimeField(11));
    auto v1 = coverage(full, SumExpression::parse("(A-A)^2 + A"));
    CHECK(v1.covered);
    CHECK(v1.missing.empty());

    auto v2 = coverage(make(7, {0, 1}), SumExpression::parse("(A-A)^2 x5"));
    CHECK(!v2.covered);
    CHECK(v2.missing == make(7, {6}));

    auto v3 = coverage(make(5, {0, 1, 2}), SumExpression::parse("A^2 + A^2"));
    CHECK(v3.covered);
}
