#include "taut/rational.hpp"
#include "taut/rng.hpp"

#include <doctest.h>

using namespace taut;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    Rational r(6, -4);
    CHECK(r.numerator() == Integer(-3));
    CHECK(r.denominator() == Integer(2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(-10, -5) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with a 64-bit oracle on small fractions") {
    Rng rng(7);
    for (int t = 0; t < 500; ++t) {
        long an = rng.range(-40, 40), ad = rng.range(1, 12);
        long bn = rng.range(-40, 40), bd = rng.range(1, 12);
        Rational a(an, ad), b(bn, bd);
        CHECK(a + b == Rational(an * bd + bn * ad, ad * bd));
        CHECK(a - b == Rational(an * bd - bn * ad, ad * bd));
        CHECK(a * b == Rational(an * bn, ad * bd));
        if (bn != 0) CHECK(a / b == Rational(an * bd, ad * bn));
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("string forms are exact for large values") {
    CHECK(factorial(25) == Integer("15511210043330985984000000"));
    Rational r = Rational::from_strings("-123456789012345678901234567", "1000000000000000000");
    CHECK(r.str() == "-123456789012345678901234567/1000000000000000000");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("generalized binomial follows the stated conventions") {
    CHECK(binomial(Rational(1), 2) == Rational(0));
    CHECK(binomial(Rational(-3), 2) == Rational(6));
    CHECK(binomial(Rational(9, 2), 0) == Rational(1));
    CHECK(binomial(Rational(4), -1) == Rational(0));
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    // for integers 0 <= m < n the value vanishes, and only there
    for (int m = 0; m <= 10; ++m)
        for (int n = 1; n <= 10; ++n)
            CHECK(binomial(Rational(m), n).is_zero() == (m < n));
}

TEST_CASE("multinomial and power helpers") {
    CHECK(multinomial({2, 2}) == Integer(6));
    CHECK(multinomial({2, 3}) == Integer(10));
    CHECK(multinomial({5}) == Integer(1));
    CHECK(int_pow(-2, 5) == Integer(-32));
    CHECK(int_pow(3, 0) == Integer(1));
}
