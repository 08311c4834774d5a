#include "taut/fourier.hpp"

#include "taut/operators.hpp"

#include <stdexcept>

namespace taut {

namespace {

Monomial monomial_from_parts(const std::vector<int>& ns) {
    std::vector<int> e;
    for (int v : ns) {
        if (static_cast<int>(e.size()) < v) e.resize(static_cast<std::size_t>(v), 0);
        ++e[static_cast<std::size_t>(v) - 1];
    }
    return Monomial::from_exponents(std::move(e));
}

Polynomial times_x1_divided(const Polynomial& p, long t, int cap) {
    return x1_divided_power(static_cast<int>(t), cap) * p;
}

}  // namespace

Polynomial fourier_S_free(const Polynomial& p, int g) {
    const int cap = p.cap();
    Polynomial out(cap);
    for (const auto& [mono, c] : p.terms()) {
        int a = mono.x1_exponent();
        std::vector<int> ns = mono.parts_ge2();
        int k = static_cast<int>(ns.size());
        long sum = mono.weighted_degree() - a;
        Rational base = c * Rational(factorial(a));  // x_1^a = a! x_1^[a]
        if (a % 2 == 1) base = -base;
        Polynomial bare = Polynomial::monomial(monomial_from_parts(ns), Rational(1), cap);
        for (int m = 0; m <= k; ++m) {
            long t = m - a + g - k - sum;
            if (t < 0) continue;
            Polynomial dd = delta_divided(m, bare);
            if (dd.is_zero()) continue;
            out += base * times_x1_divided(dd, t, cap);
        }
    }
    return out;
}

Polynomial fourier_S(const Polynomial& p, const GenusContext& ctx) {
    Polynomial s = fourier_S_free(p, ctx.genus);
    if (ctx.mode == RingMode::Quotient) return normal_form(s, ctx);
    return s;
}

Polynomial fourier_S_inv(const Polynomial& p, const GenusContext& ctx) {
    if (ctx.mode == RingMode::Free) {
        for (const auto& [m, c] : p.terms())
            if (!vprime_membership(m, ctx.genus))
                throw std::invalid_argument(
                    "fourier_S_inv: free-mode input outside V' has no inverse");
    }
    Polynomial r = apply_inversion(fourier_S_free(p, ctx.genus));
    if (ctx.genus % 2 == 1) r = -r;
    if (ctx.mode == RingMode::Quotient) return normal_form(r, ctx);
    return r;
}

Polynomial apply_U(const Polynomial& p, const GenusContext& ctx) {
    Polynomial r = apply_D(p, ctx.genus);
    if (ctx.mode == RingMode::Quotient) return normal_form(r, ctx);
    return r;
}

Polynomial U_divided(int n, const Polynomial& p, int g) {
    if (n < 0) throw std::invalid_argument("U_divided: negative power");
    Polynomial out(p.cap());
    for (int i = 0; i <= n; ++i) {
        Polynomial t = operator_binomial_H(i, n - i, p, g);
        t = delta_divided(i, t);
        for (int j = 0; j < n - i; ++j) t = partial(t, 1);
        out += t;
    }
    return out;
}

Polynomial exp_pontryagin(const Polynomial& p, const GenusContext& ctx) {
    const int g = ctx.genus;
    const int cap = p.cap();
    Polynomial out(cap);
    for (const auto& [mono, c] : p.terms()) {
        int a = mono.x1_exponent();
        std::vector<int> ns = mono.parts_ge2();
        int k = static_cast<int>(ns.size());
        long sum = mono.weighted_degree() - a;
        Rational base = c * Rational(factorial(a));
        Polynomial bare = Polynomial::monomial(monomial_from_parts(ns), Rational(1), cap);
        for (int j = 0; j <= k && j <= g; ++j) {
            Polynomial dd = delta_divided(j, bare);
            if (dd.is_zero()) continue;
            for (int l = j; l <= g; ++l) {
                long t = a - l + j;
                if (t < 0) break;  // t only shrinks as l grows
                Rational coeff = binomial(Rational(-j + a - g - 1 + k + sum), l - j);
                if (coeff.is_zero()) continue;
                if (l % 2 == 1) coeff = -coeff;
                out += (base * coeff) * times_x1_divided(dd, t, cap);
            }
        }
    }
    if (g % 2 == 1) out = -out;
    if (ctx.mode == RingMode::Quotient) return normal_form(out, ctx);
    return out;
}

Polynomial pontryagin_mul(const Polynomial& a, const Polynomial& b, const GenusContext& ctx) {
    if (ctx.mode != RingMode::Quotient)
        throw std::invalid_argument("pontryagin_mul: defined in quotient mode only");
    require_same_cap(a, b);
    Polynomial sa = fourier_S(a, ctx);
    Polynomial sb = fourier_S(b, ctx);
    return fourier_S_inv(sa * sb, ctx);
}

Polynomial nop1_fourier(const std::vector<int>& ns, int g, int cap) {
    for (int v : ns)
        if (v <= 1) throw std::invalid_argument("nop1_fourier: parts must exceed 1");
    long sum = 0;
    for (int v : ns) sum += v;
    Polynomial bare = Polynomial::monomial(monomial_from_parts(ns), Rational(1), cap);
    int k = static_cast<int>(ns.size());
    Polynomial out(cap);
    for (int j = 0; j <= k; ++j) {
        long t = j + g - k - sum;
        if (t < 0) continue;
        Polynomial dd = delta_divided(j, bare);
        if (dd.is_zero()) continue;
        out += times_x1_divided(dd, t, cap);
    }
    return out;
}

Polynomial exp_p1(int sign, int cap) {
    Polynomial out(cap);
    for (int l = 0; l <= cap; ++l) {
        Rational c(Integer(1), factorial(l));
        if (sign < 0 && l % 2 == 1) c = -c;
        out.add_term(Monomial::from_exponents({l}), c);
    }
    return out;
}

}  // namespace taut
