#include "taut/newton.hpp"

#include <stdexcept>
#include <vector>

namespace taut {

namespace {

// Power sums of the roots in terms of the elementary symmetric w's, via
// Newton's recurrence with w_j = 0 for j > g. Entry t is P_t; P_0 = g.
std::vector<Polynomial> power_sums_in_w(int g, int upto, int cap) {
    std::vector<Polynomial> P;
    P.push_back(Polynomial::constant(Rational(g), cap));
    for (int t = 1; t <= upto; ++t) {
        Polynomial s(cap);
        for (int i = 1; i < t; ++i) {
            if (i > g) break;
            Rational sign((i % 2 == 1) ? 1 : -1);
            s += sign * (Polynomial::variable(i, cap) * P[static_cast<std::size_t>(t - i)]);
        }
        if (t <= g) {
            Rational sign((t % 2 == 1) ? 1 : -1);
            s += sign * Rational(t) * Polynomial::variable(t, cap);
        }
        P.push_back(std::move(s));
    }
    return P;
}

// Elementary symmetric functions written in the p's, using P_t = -t! p_t.
std::vector<Polynomial> elementary_in_p(int g, int cap) {
    std::vector<Polynomial> P;  // power sums in the p's
    P.push_back(Polynomial::constant(Rational(g), cap));
    for (int t = 1; t <= g; ++t)
        P.push_back(Rational(-factorial(t)) * Polynomial::variable(t, cap));
    std::vector<Polynomial> E;
    E.push_back(Polynomial::constant(Rational(1), cap));
    for (int t = 1; t <= g; ++t) {
        Polynomial s(cap);
        for (int i = 1; i <= t; ++i) {
            Rational sign((i % 2 == 1) ? 1 : -1);
            s += sign * (E[static_cast<std::size_t>(t - i)] * P[static_cast<std::size_t>(i)]);
        }
        E.push_back(Rational(Integer(1), Integer(t)) * s);
    }
    return E;
}

}  // namespace

Polynomial newton_w_to_p(const Polynomial& wpoly, int g) {
    if (g < 1) throw std::invalid_argument("newton_w_to_p: g must be >= 1");
    int cap = wpoly.cap();
    auto E = elementary_in_p(g, cap);
    return substitute(wpoly, [&](int i) {
        if (i > g) throw std::invalid_argument("newton_w_to_p: w-index exceeds genus");
        return E[static_cast<std::size_t>(i)];
    }, cap);
}

Polynomial newton_p_to_w(const Polynomial& ppoly, int g) {
    if (g < 1) throw std::invalid_argument("newton_p_to_w: g must be >= 1");
    int cap = ppoly.cap();
    int maxvar = 0;
    for (const auto& [m, c] : ppoly.terms()) maxvar = std::max(maxvar, m.max_index());
    auto P = power_sums_in_w(g, maxvar, cap);
    return substitute(ppoly, [&](int i) {
        // p_i = -P_i / i!
        return Rational(Integer(-1), factorial(i)) * P[static_cast<std::size_t>(i)];
    }, cap);
}

}  // namespace taut
