#include "taut/expr.hpp"
#include "taut/fourier.hpp"
#include "taut/operators.hpp"
#include "taut/rng.hpp"

#include <doctest.h>

using namespace taut;

TEST_CASE("transform of the unit and of single generators") {
    const int g = 4, cap = 10;
    CHECK(fourier_S_free(Polynomial::constant(Rational(1), cap), g) == x1_divided_power(g, cap));
    const int g6 = 6;
    CHECK(fourier_S_free(Polynomial::variable(2, cap), g6) ==
          x1_divided_power(3, cap) * Polynomial::variable(2, cap));
    for (int n = 0; n <= g6; ++n) {
        Polynomial lhs = fourier_S_free(x1_divided_power(n, cap), g6);
        Polynomial rhs = x1_divided_power(g6 - n, cap);
        if (n % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("transform of p2 squared at genus 7") {
    const int cap = 16;
    Polynomial p2sq = pow(Polynomial::variable(2, cap), 2);
    CHECK(fourier_S_free(p2sq, 7) == parse_expression("p1*p2^2 + 3*p1^2*p3", cap));
}

TEST_CASE("involution on the stable range") {
    const int g = 6, cap = 14;
    // x1 x2: 1 + 1 + 2 <= 6, so S^2 returns it with sign (-1)^{g+k+sum}
    Polynomial m = Polynomial::monomial(Monomial::from_exponents({1, 1}), Rational(1), cap);
    Polynomial ss = fourier_S_free(fourier_S_free(m, g), g);
    CHECK(ss == -m);  // g + 1 + 2 = 9 odd
}

TEST_CASE("inverse transform round trips in the quotient") {
    const int g = 5;
    GenusContext ctx = GenusContext::quotient(g);
    Polynomial p2 = Polynomial::variable(2, g);
    CHECK(fourier_S_inv(fourier_S(p2, ctx), ctx) == p2);
    CHECK(fourier_S_inv(x1_divided_power(g, g), ctx) == Polynomial::constant(Rational(1), g));
    GenusContext free_ctx = GenusContext::free_ring(g);
    Polynomial outside = pow(Polynomial::variable(2, free_ctx.cap), 2);  // 0+2+4 > 5
    CHECK_THROWS_AS(fourier_S_inv(outside, free_ctx), std::invalid_argument);
}

TEST_CASE("U acts as D and has consistent divided powers") {
    const int g = 9, cap = 20;
    GenusContext free_ctx = GenusContext::free_ring(g, cap);
    CHECK(apply_U(x1_divided_power(2, cap), free_ctx) ==
          Rational(1 - g) * Polynomial::variable(1, cap));
    CHECK(apply_U(Polynomial::variable(2, cap), free_ctx).is_zero());
    CHECK(U_divided(0, x1_divided_power(4, cap), g) == x1_divided_power(4, cap));
    Polynomial probe = x1_divided_power(4, cap) * Polynomial::variable(2, cap) *
                       Polynomial::variable(3, cap);
    CHECK(U_divided(1, probe, g) == apply_D(probe, g));
    Polynomial it = probe;
    for (int i = 0; i < 3; ++i) it = apply_D(it, g);
    CHECK(U_divided(3, probe, g) == Rational(1, 6) * it);
}

TEST_CASE("exp convolution closed form against the alternating U sum") {
    for (int g : {5, 8}) {
        const int cap = 2 * g + 2;
        GenusContext free_ctx = GenusContext::free_ring(g, cap);
        for (long d = 0; d <= g; ++d)
            for (const auto& m : monomials_of_degree(d, cap)) {
                Polynomial p = Polynomial::monomial(m, Rational(1), cap);
                Polynomial rhs(cap);
                for (int l = 0; l <= g; ++l) {
                    Polynomial term = U_divided(l, p, g);
                    if ((g + l) % 2 == 1) term = -term;
                    rhs += term;
                }
                CHECK(exp_pontryagin(p, free_ctx) == rhs);
            }
    }
}

TEST_CASE("pontryagin product structure in the quotient") {
    const int g = 6;
    GenusContext ctx = GenusContext::quotient(g);
    Rng rng(31);
    for (int t = 0; t < 6; ++t) {
        Polynomial a = normal_form(rng.polynomial(g, g, 3), ctx);
        Polynomial b = normal_form(rng.polynomial(g, g, 3), ctx);
        CHECK(fourier_S(pontryagin_mul(a, b, ctx), ctx) ==
              normal_form(fourier_S(a, ctx) * fourier_S(b, ctx), ctx));
        CHECK(pontryagin_mul(a, b, ctx) == pontryagin_mul(b, a, ctx));
        CHECK(pontryagin_mul(x1_divided_power(g, g), a, ctx) == a);  // g even
    }
    GenusContext free_ctx = GenusContext::free_ring(g);
    Polynomial x(free_ctx.cap);
    CHECK_THROWS_AS(pontryagin_mul(x, x, free_ctx), std::invalid_argument);
}

TEST_CASE("x1-free transform formula") {
    const int cap = 16;
    CHECK(nop1_fourier({2}, 6, cap) ==
          x1_divided_power(3, cap) * Polynomial::variable(2, cap));
    CHECK(nop1_fourier({2, 2}, 7, cap) == parse_expression("p1*p2^2 + 3*p1^2*p3", cap));
    CHECK(nop1_fourier({7}, 7, cap).is_zero());
    CHECK_THROWS_AS(nop1_fourier({1, 2}, 7, cap), std::invalid_argument);
}

TEST_CASE("transform factors through divided U powers") {
    const int g = 6, cap = 14;
    for (long d = 0; d <= g; ++d)
        for (const auto& m : monomials_of_degree(d, cap)) {
            int a = m.x1_exponent();
            Polynomial whole = Polynomial::monomial(m, Rational(1), cap);
            Polynomial bare = Polynomial::monomial(m.with_extra(1, -a), Rational(1), cap);
            CHECK(fourier_S_free(whole, g) ==
                  Rational(factorial(a)) * U_divided(a, fourier_S_free(bare, g), g));
        }
}

TEST_CASE("truncated exponentials") {
    Polynomial e = exp_p1(1, 3);
    CHECK(e.coefficient(Monomial()) == Rational(1));
    CHECK(e.coefficient(Monomial::from_exponents({2})) == Rational(1, 2));
    CHECK(e.coefficient(Monomial::from_exponents({3})) == Rational(1, 6));
    Polynomial en = exp_p1(-1, 3);
    CHECK(en.coefficient(Monomial::from_exponents({3})) == Rational(-1, 6));
}
