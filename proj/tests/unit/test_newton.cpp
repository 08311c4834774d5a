#include "taut/expr.hpp"
#include "taut/newton.hpp"
#include "taut/tautring.hpp"

#include <doctest.h>

using namespace taut;

TEST_CASE("generators expressed in the w-classes") {
    const int g = 6, cap = 8;
    CHECK(newton_p_to_w(Polynomial::variable(1, cap), g) ==
          parse_expression("-w1", cap, Alphabet::W));
    CHECK(newton_p_to_w(Polynomial::variable(2, cap), g) ==
          parse_expression("w2 - w1^2/2", cap, Alphabet::W));
    // the w3 sign is pinned by the specialization w_d = w1^d/d!, which must
    // kill every p_k with k > 1
    CHECK(newton_p_to_w(Polynomial::variable(3, cap), g) ==
          parse_expression("w1*w2/2 - w3/2 - w1^3/6", cap, Alphabet::W));
}

TEST_CASE("w-classes expressed in the generators") {
    const int g = 5, cap = 6;
    CHECK(newton_w_to_p(parse_expression("w1", cap, Alphabet::W), g) ==
          parse_expression("-p1", cap));
    CHECK(newton_w_to_p(parse_expression("w2", cap, Alphabet::W), g) ==
          parse_expression("p2 + p1^2/2", cap));
}

TEST_CASE("conversions are mutually inverse") {
    for (int g : {2, 5, 8}) {
        for (long n = 0; n <= g; ++n)
            for (const auto& m : monomials_of_degree(n, g)) {
                Polynomial p = Polynomial::monomial(m, Rational(1), g);
                CHECK(newton_w_to_p(newton_p_to_w(p, g), g) == p);
                CHECK(newton_p_to_w(newton_w_to_p(p, g), g) == p);
            }
    }
}

TEST_CASE("poincare specialization kills the higher generators") {
    // with w_d = w1^d/d! all p_k, k > 1, must vanish identically
    const int g = 6, cap = 6;
    for (int k = 2; k <= g; ++k) {
        Polynomial in_w = newton_p_to_w(Polynomial::variable(k, cap), g);
        Polynomial value = substitute(
            in_w, [&](int i) { return x1_divided_power(i, cap); }, cap);
        CHECK(value.is_zero());
    }
}

TEST_CASE("w-indices above the genus are rejected") {
    CHECK_THROWS_AS(
        newton_w_to_p(parse_expression("w4", 6, Alphabet::W), 3), std::invalid_argument);
}
