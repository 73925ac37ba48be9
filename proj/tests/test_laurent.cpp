#include "doctest.h"
#include "knotcalc/laurent.hpp"

using namespace knotcalc;

using LP = LaurentPolynomial;

TEST_CASE("laurent construction and accessors") {
    LP z;
    CHECK(z.is_zero());
    CHECK(z.span() == 0);
    CHECK_THROWS_AS(z.min_exp(), invariant_error);

    LP p = LP::constant(3) + LP::monomial(2, -1) + LP::monomial(-1, 4);
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 2);
    CHECK(p.span() == 3);
    CHECK(p.coeff(-1) == 4);
    CHECK(p.coeff(0) == 3);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);
    CHECK(p.terms().size() == 3);
}

TEST_CASE("laurent ring operations") {
    LP a = LP::parse("1 - t + t^2");
    LP b = LP::parse("1 + t");
    CHECK(a * b == LP::parse("1 + t^3"));
    CHECK(a + b == LP::parse("2 + t^2"));
    CHECK(a - a == LP());
    CHECK(-a == LP::parse("-1 + t - t^2"));
    CHECK(a.shifted(2) == LP::parse("t^2 - t^3 + t^4"));
    CHECK(a.shifted(-1) == LP::parse("t^-1 - 1 + t"));
    // cancellation removes stored terms entirely
    CHECK((b * b - LP::parse("2t")) == LP::parse("1 + t^2"));
}

TEST_CASE("exact division succeeds exactly when the quotient has integer coefficients") {
    LP prod = LP::parse("1 + t^3");
    CHECK(prod.divide_exact(LP::parse("1 + t")) == LP::parse("1 - t + t^2"));
    CHECK(prod.divide_exact(LP::parse("1 - t + t^2")) == LP::parse("1 + t"));
    // dividing by a unit times t^k shifts
    CHECK(LP::parse("t^2 + t^5").divide_exact(LP::parse("t^2")) == LP::parse("1 + t^3"));
    CHECK_THROWS_AS(LP::parse("1 + t^2").divide_exact(LP::parse("1 + t")), invariant_error);
    CHECK_THROWS_AS(LP::parse("1 + t").divide_exact(LP::parse("2")), invariant_error);
    CHECK_THROWS_AS(LP::parse("1").divide_exact(LP()), invariant_error);
}

TEST_CASE("mod reduces into [0, p)") {
    LP p = LP::parse("-1 + 5t - 7t^2");
    CHECK(p.mod(5) == LP::parse("4 + 3t^2"));
    CHECK_THROWS_AS(p.mod(0), invariant_error);
}

TEST_CASE("evaluate is exact over big integers") {
    LP p = LP::parse("1 - t + t^2");
    CHECK(p.evaluate(1) == 1);
    CHECK(p.evaluate(-1) == 3);
    CHECK(p.evaluate(10) == 91);
    CHECK_THROWS_AS(LP::parse("t^-1").evaluate(2), invariant_error);
}

TEST_CASE("laurent text round trip") {
    for (const char* s : {"0", "1", "-1", "t", "-t", "1 - t + t^2", "2 - 5t + 2t^2",
                          "t^-1 - 1 + t", "-t^-2 + 3 - 7t^5", "12345678901234567890t^3"}) {
        LP p = LP::parse(s);
        CHECK(p.str() == s);
        CHECK(LP::parse(p.str()) == p);
    }
    CHECK(LP().str() == "0");
    CHECK_THROWS_AS(LP::parse(""), parse_error);
    CHECK_THROWS_AS(LP::parse("t +"), parse_error);
    CHECK(LP::parse("1 t") == LP::parse("t"));  // whitespace inside a term is tolerated
    CHECK_THROWS_AS(LP::parse("1 1"), parse_error);
    CHECK_THROWS_AS(LP::parse("x^2"), parse_error);
}
