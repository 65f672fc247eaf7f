#include <doctest.h>

#include "algaudit/errors.hpp"
#include "algaudit/fp.hpp"
#include "algaudit/rational.hpp"

using namespace algaudit;

TEST_CASE("rational arithmetic is exact and normalized") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("+5/2") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational division by zero") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("large values do not overflow") {
    Rational x(1);
    for (int i = 0; i < 40; ++i) x *= Rational(1000003);
    CHECK(x / x == Rational(1));
    CHECK(x.str().size() > 200);
}

TEST_CASE("reduction mod p") {
    CHECK(reduce_mod_p(Rational(1, 2), 5).value() == 3);
    CHECK(reduce_mod_p(Rational(-1), 7).value() == 6);
    CHECK(reduce_mod_p(Rational(10), 5).is_zero());
    CHECK_THROWS_AS(reduce_mod_p(Rational(1, 5), 5), BadPrime);
    CHECK(inverse_mod(3, 7) == 5);
    CHECK_THROWS(FpScalar(1, 4));
}

TEST_CASE("F_p field operations") {
    const FpScalar a(3, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((a / b).value() == 2);
    CHECK((-a).value() == 4);
    CHECK_THROWS_AS(FpScalar(0, 7).inverse(), DivisionByZero);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
