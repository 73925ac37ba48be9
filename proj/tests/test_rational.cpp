#include "doctest.h"
#include "knotcalc/rational.hpp"

using namespace knotcalc;

TEST_CASE("rationals reduce and keep positive denominators") {
    Rational r(Integer(6), Integer(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(Integer(0), Integer(7)) == Rational(0));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), invariant_error);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(Integer(1), Integer(3));
    Rational b(Integer(1), Integer(6));
    CHECK(a + b == Rational(Integer(1), Integer(2)));
    CHECK(a - b == b);
    CHECK(a * b == Rational(Integer(1), Integer(18)));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(Integer(-1), Integer(3)));
    CHECK_THROWS_AS(a / Rational(0), invariant_error);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(Integer(1), Integer(3)) < Rational(Integer(1), Integer(2)));
    CHECK(Rational(Integer(-1), Integer(2)) < Rational(Integer(-1), Integer(3)));
    CHECK(Rational(2) <= Rational(2));
    CHECK(Rational(3) > Rational(Integer(5), Integer(2)));
}

TEST_CASE("floor and ceil agree with the number line on negatives") {
    Rational r(Integer(-7), Integer(2));
    CHECK(r.floor() == -4);
    CHECK(r.ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(5).ceil() == 5);
    CHECK(Rational(Integer(7), Integer(2)).floor() == 3);
    CHECK(Rational(Integer(7), Integer(2)).ceil() == 4);
}

TEST_CASE("rational text round trip") {
    for (const char* s : {"0", "5", "-3", "1/2", "-7/3", "123456789123456789/2"}) {
        Rational r = Rational::parse(s);
        CHECK(r.str() == s);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("4/2") == Rational(2));
    CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
    CHECK_THROWS_AS(Rational::parse("abc"), parse_error);
    CHECK_THROWS_AS(Rational::parse(""), parse_error);
}
