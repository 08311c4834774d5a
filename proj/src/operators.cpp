#include "taut/operators.hpp"

#include "taut/partitions.hpp"

#include <stdexcept>

namespace taut {

Polynomial partial(const Polynomial& p, int index) {
    Polynomial r(p.cap());
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(index);
        if (e == 0) continue;
        r.add_term(m.with_extra(index, -1), c * Rational(e));
    }
    return r;
}

namespace {

// Merge contribution of one monomial under the second-order part
// (1/2) sum_{m,n>=lo} binom(m+n, m) x_{m+n-1} d_m d_n: unordered pairs of
// factor indices, diagonal pairs carrying the 1/2.
void add_merge_terms(Polynomial& out, const Monomial& mono, const Rational& coeff, int lo) {
    int top = mono.max_index();
    for (int m = lo; m <= top; ++m) {
        int em = mono.exponent(m);
        if (em == 0) continue;
        for (int n = m; n <= top; ++n) {
            int en = mono.exponent(n);
            Rational mult;
            if (n == m) {
                if (em < 2) continue;
                mult = Rational(Integer(em) * Integer(em - 1), Integer(2));
            } else {
                if (en == 0) continue;
                mult = Rational(Integer(em) * Integer(en));
            }
            Monomial target = mono.with_extra(m, -1).with_extra(n, -1).with_extra(m + n - 1, 1);
            out.add_term(target, coeff * mult * Rational(multinomial({m, n})));
        }
    }
}

}  // namespace

Polynomial apply_D(const Polynomial& p, int g) {
    Polynomial r = partial(p, 1);
    r *= Rational(-g);
    for (const auto& [m, c] : p.terms()) add_merge_terms(r, m, c, 1);
    return r;
}

Polynomial apply_Delta(const Polynomial& p) {
    Polynomial r(p.cap());
    for (const auto& [m, c] : p.terms()) add_merge_terms(r, m, c, 2);
    return r;
}

long h_big_eigenvalue(const Monomial& m, int g) {
    // x_1^a x_{n_1}..x_{n_k} -> -g + a - 1 + k + sum n_i, and
    // degree + k = a + sum n_i + k
    long k = m.factor_count() - m.x1_exponent();
    return -g - 1 + m.weighted_degree() + k;
}

Polynomial apply_H(const Polynomial& p, int g) {
    Polynomial r(p.cap());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c * Rational(h_big_eigenvalue(m, g)));
    return r;
}

Polynomial delta_divided(int m, const Polynomial& p) {
    if (m < 0) throw std::invalid_argument("delta_divided: negative power");
    if (m == 0) return p;
    Polynomial r(p.cap());
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> ns = mono.parts_ge2();
        int k = static_cast<int>(ns.size());
        if (k - m < 1) continue;
        Monomial x1part = Monomial::from_exponents({mono.x1_exponent()});
        for (const auto& part : set_partitions(k, k - m)) {
            Rational w(1);
            Monomial target = x1part;
            for (const auto& block : part.blocks) {
                w *= Rational(block_b(ns, block));
                target = target.with_extra(block_d(ns, block), 1);
            }
            r.add_term(target, c * w);
        }
    }
    return r;
}

namespace {

// Multisets of k derivative indices applicable to mono (mu_i <= e_i), with
// indices >= lo. Calls visit(indices ascending with repetition).
template <typename F>
void derivative_multisets(const Monomial& mono, int k, int lo, std::vector<int>& acc,
                          const F& visit) {
    if (static_cast<int>(acc.size()) == k) {
        visit(acc);
        return;
    }
    int start = acc.empty() ? lo : acc.back();
    for (int i = start; i <= mono.max_index(); ++i) {
        int used = 0;
        for (int j : acc)
            if (j == i) ++used;
        if (used >= mono.exponent(i)) continue;
        acc.push_back(i);
        derivative_multisets(mono, k, lo, acc, visit);
        acc.pop_back();
    }
}

// Falling-factorial product for iterated partials of a monomial, together
// with the resulting monomial.
Rational apply_partials(const Monomial& mono, const std::vector<int>& idx, Monomial& result) {
    Rational f(1);
    result = mono;
    for (int i : idx) {
        f *= Rational(result.exponent(i));
        result = result.with_extra(i, -1);
    }
    return f;
}

Polynomial multiset_operator(const Polynomial& p, int k, int m, int lo) {
    // shared core of D_k (lo=1, m=0) and Delta_{k,m} (lo=2): coefficient
    // (sum n + m)! / (prod n_i! m! prod mu_j!) on each derivative multiset
    Polynomial r(p.cap());
    Integer mfac = factorial(m);
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> acc;
        derivative_multisets(mono, k, lo, acc, [&](const std::vector<int>& idx) {
            int sum = m;
            for (int i : idx) sum += i;
            Integer denom = mfac;
            for (int i : idx) denom *= factorial(i);
            int run = 1;
            for (std::size_t t = 1; t <= idx.size(); ++t) {
                if (t < idx.size() && idx[t] == idx[t - 1]) {
                    ++run;
                } else {
                    denom *= factorial(run);
                    run = 1;
                }
            }
            Monomial stripped;
            Rational f = apply_partials(mono, idx, stripped);
            if (sum - 1 >= 1) {
                r.add_term(stripped.with_extra(sum - 1, 1),
                           c * f * Rational(factorial(sum), denom));
            }
        });
    }
    return r;
}

}  // namespace

Polynomial apply_Dk(int k, const Polynomial& p) {
    if (k < 2) throw std::invalid_argument("apply_Dk: k must be >= 2");
    return multiset_operator(p, k, 0, 1);
}

Polynomial apply_Delta_km(int k, int m, const Polynomial& p) {
    if (k < 0 || m < 0 || k + m < 2)
        throw std::invalid_argument("apply_Delta_km: need k,m >= 0 and k+m >= 2");
    if (k == 0) {
        // multiplication by x_{m-1}
        return p * Polynomial::variable(m - 1, p.cap());
    }
    return multiset_operator(p, k, m, 2);
}

Polynomial sl2_e(const Polynomial& p) { return p * Polynomial::variable(1, p.cap()); }

Polynomial sl2_f(const Polynomial& p, int g) { return -apply_D(p, g); }

long h_sl2_eigenvalue(const Monomial& m, int g) {
    // -g + sum (n+1) e_n = -g + degree + factor count
    return -g + m.weighted_degree() + m.factor_count();
}

Polynomial sl2_h(const Polynomial& p, int g) {
    Polynomial r(p.cap());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c * Rational(h_sl2_eigenvalue(m, g)));
    return r;
}

Polynomial apply_inversion(const Polynomial& p) {
    Polynomial r(p.cap());
    for (const auto& [m, c] : p.terms()) {
        long sign_exp = m.weighted_degree() + m.factor_count();  // sum (i+1) e_i
        r.add_term(m, (sign_exp % 2 == 0) ? c : -c);
    }
    return r;
}

namespace {

Polynomial scale_by_weight(const Polynomial& p, int n,
                           const std::function<long(const Monomial&)>& exponent_of) {
    Polynomial r(p.cap());
    for (const auto& [m, c] : p.terms()) {
        long e = exponent_of(m);
        if (n == 0) {
            if (e == 0) r.add_term(m, c);  // 0^0 = 1
            continue;
        }
        // negative exponents occur only above degree g in the free ring,
        // where the formal grading extends rationally
        Rational scale = e >= 0 ? Rational(int_pow(n, e))
                                : Rational(1) / Rational(int_pow(n, -e));
        r.add_term(m, c * scale);
    }
    return r;
}

}  // namespace

Polynomial scaling_pullback(int n, const Polynomial& p, int g) {
    (void)g;
    return scale_by_weight(p, n, [](const Monomial& m) {
        return 2 * m.weighted_degree() - m.beauville_weight();
    });
}

Polynomial scaling_pushforward(int n, const Polynomial& p, int g) {
    return scale_by_weight(p, n, [g](const Monomial& m) {
        return 2 * (g - m.weighted_degree()) + m.beauville_weight();
    });
}

Polynomial operator_binomial_H(int i, int j, const Polynomial& p, int g) {
    if (j < 0) return Polynomial::zero(p.cap());
    Polynomial r(p.cap());
    for (const auto& [m, c] : p.terms())
        r.add_term(m, c * binomial(Rational(h_big_eigenvalue(m, g) - i), j));
    return r;
}

Polynomial d_divided(int d, const Polynomial& p, int g) {
    if (d < 0) throw std::invalid_argument("d_divided: negative power");
    Polynomial r = p;
    for (int t = 0; t < d; ++t) r = apply_D(r, g);
    return r * Rational(Integer(1), factorial(d));
}

LinearOperator make_op_D(int g) {
    return {"D", -1, [g](const Polynomial& p) { return apply_D(p, g); }};
}
LinearOperator make_op_Delta() {
    return {"Delta", -1, [](const Polynomial& p) { return apply_Delta(p); }};
}
LinearOperator make_op_H(int g) {
    return {"H", 0, [g](const Polynomial& p) { return apply_H(p, g); }};
}
LinearOperator make_op_Dk(int k) {
    return {"D_" + std::to_string(k), -1,
            [k](const Polynomial& p) { return apply_Dk(k, p); }};
}
LinearOperator make_op_Delta_km(int k, int m) {
    return {"Delta_{" + std::to_string(k) + "," + std::to_string(m) + "}", m - 1,
            [k, m](const Polynomial& p) { return apply_Delta_km(k, m, p); }};
}
LinearOperator make_op_e() {
    return {"e", 1, [](const Polynomial& p) { return sl2_e(p); }};
}
LinearOperator make_op_f(int g) {
    return {"f", -1, [g](const Polynomial& p) { return sl2_f(p, g); }};
}
LinearOperator make_op_h(int g) {
    return {"h", 0, [g](const Polynomial& p) { return sl2_h(p, g); }};
}

}  // namespace taut
