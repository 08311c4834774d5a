// Acceptance suite: one line per criterion, exact arithmetic throughout, all
// bounds pinned here. Exits nonzero if any criterion fails.

#include "taut/checks.hpp"
#include "taut/echelon.hpp"
#include "taut/expr.hpp"
#include "taut/fourier.hpp"
#include "taut/newton.hpp"
#include "taut/operators.hpp"
#include "taut/partitions.hpp"
#include "taut/relations.hpp"
#include "taut/rng.hpp"
#include "taut/tautring.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#ifndef TAUTJAC_GOLDEN_DIR
#define TAUTJAC_GOLDEN_DIR "data/golden"
#endif

using namespace taut;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& text) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << text << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Polynomial mono(const Monomial& m, int cap) { return Polynomial::monomial(m, Rational(1), cap); }

void for_each_weight_multiset(int k, int budget, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> ns;
    auto rec = [&](auto&& self, int depth, int lo, int left) -> void {
        if (depth == k) {
            fn(ns);
            return;
        }
        for (int v = lo; v * (k - depth) <= left; ++v) {
            ns.push_back(v);
            self(self, depth + 1, v, left - v);
            ns.pop_back();
        }
    };
    rec(rec, 0, 2, budget);
}

std::vector<Monomial> monomials_up_to(long maxdeg, int cap) {
    std::vector<Monomial> out;
    for (long n = 0; n <= maxdeg; ++n)
        for (const auto& m : monomials_of_degree(n, cap)) out.push_back(m);
    return out;
}

// 1. computed relation tables against the transcribed reference tables
void criterion_golden_tables() {
    auto t0 = std::chrono::steady_clock::now();
    std::string dir = TAUTJAC_GOLDEN_DIR;
    std::string mismatch;
    bool ok = true;
    for (int g = 4; g <= 10; ++g) {
        RelationTable computed = relation_table(g, false);
        RelationTable golden = load_relation_table_file(dir + "/g" + std::to_string(g) + ".txt", g);
        if (!table_equivalent(computed, golden)) {
            ok = false;
            mismatch += " g=" + std::to_string(g);
        }
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 5.0;
    std::ostringstream os;
    os << "relation tables span-match the transcribed reference per (d, codim) group, g=4..10";
    if (!mismatch.empty())
        os << " —" << " reference data diverges at" << mismatch
           << " (g=9 reference omits the consequence p1^2*p6 = 0; g=10 reference splits the "
              "two-term row 3*p3*p4 + 7*p2*p5 = 0 and three relatives; the computed family is "
              "certified by the image-intersection criterion below)";
    os << " [" << dt << " s]";
    report(1, ok, os.str());
}

// 2. the main relation family vanishes and its three constructions agree
void criterion_main_relations() {
    bool ok = true;
    long count = 0;
    for (int g = 4; g <= 10; ++g) {
        GenusContext ctx = GenusContext::quotient(g);
        for (int k = 1; 2 * k <= g; ++k)
            for_each_weight_multiset(k, g, [&](const std::vector<int>& ns) {
                long sum = 0;
                for (int v : ns) sum += v;
                for (int d = 0; d <= k - 1; ++d) {
                    RelationSpec spec{g, d, ns};
                    Polynomial rel = relation_partition_form(spec);
                    if (!in_ideal(rel, ctx)) ok = false;
                    if (rel != relation_divided_form(spec)) ok = false;
                    Polynomial seed = x1_divided_power(static_cast<int>(g - sum), g);
                    for (int v : ns) seed = seed * Polynomial::variable(v, g);
                    if (rel != U_divided(d, seed, g)) ok = false;
                    ++count;
                }
            });
    }
    report(2, ok,
           "all " + std::to_string(count) +
               " parameter choices for g <= 10: partition form = divided-power form = U^[d] of "
               "the degree-g seed, all in the ideal, exactly");
}

// 3. the transform against its set-partition closed form
void criterion_fourier_closed_form() {
    bool ok = true;
    for (int g = 2; g <= 9; ++g) {
        const int cap = 2 * g + 2;
        for (const auto& m : monomials_up_to(g, cap)) {
            int a = m.x1_exponent();
            std::vector<int> ns = m.parts_ge2();
            int k = static_cast<int>(ns.size());
            long sum = m.weighted_degree() - a;
            Polynomial expect(cap);
            Rational base = Rational(factorial(a));
            if (a % 2 == 1) base = -base;
            if (k == 0) {
                if (g - a >= 0)
                    expect += base * x1_divided_power(g - a, cap);
            } else {
                for (int blocks = 1; blocks <= k; ++blocks) {
                    long t = g - a - blocks - sum;
                    if (t < 0) continue;
                    for (const auto& part : set_partitions(k, blocks)) {
                        Rational w = base;
                        Monomial target;
                        for (const auto& block : part.blocks) {
                            w *= Rational(block_b(ns, block));
                            target = target.with_extra(block_d(ns, block), 1);
                        }
                        expect += w * (x1_divided_power(static_cast<int>(t), cap) *
                                       mono(target, cap));
                    }
                }
            }
            if (fourier_S_free(mono(m, cap), g) != expect) ok = false;
        }
        Polynomial p2 = Polynomial::variable(2, 2 * g + 2);
        if (g >= 3 && fourier_S_free(p2, g) != x1_divided_power(g - 3, 2 * g + 2) * p2) ok = false;
    }
    report(3, ok,
           "S equals the set-partition closed form on every monomial of degree <= g for g <= 9; "
           "S(p2) = p1^[g-3] p2 verbatim");
}

// 4. quotient structure: images of D, ideal closure, signed involution, sl2
void criterion_ring_structure() {
    bool ok = true;
    // (i) per-degree stabilized images of D^j
    for (int g = 2; g <= 8; ++g) {
        const int cap = g + 6;
        for (long n = 0; n <= g; ++n) {
            EchelonBasis target = EchelonBasis::reduce_rows(ideal_generators(g, n, cap), n);
            int jmax = static_cast<int>(g - n) + 4;
            for (int j = 1; j <= jmax; ++j) {
                std::vector<Polynomial> rows;
                for (const auto& m : monomials_of_degree(n + j, cap)) {
                    Polynomial im = mono(m, cap);
                    for (int t = 0; t < j; ++t) im = apply_D(im, g);
                    rows.push_back(std::move(im));
                }
                EchelonBasis image = EchelonBasis::reduce_rows(rows, n);
                if (!image.contains_all(target)) ok = false;
                if (j > static_cast<int>(g - n) && !image.same_span(target)) ok = false;
            }
        }
    }
    // (ii) multiplicative closure on 100 random pairs per genus
    Rng rng(2024);
    for (int g = 2; g <= 8; ++g) {
        GenusContext ctx = GenusContext::quotient(g);
        for (int t = 0; t < 100; ++t) {
            long n = rng.range(1, g);
            auto gens = ideal_generators(g, n, g);
            if (gens.empty()) continue;
            Polynomial p(g);
            for (int pick = 0; pick < 3; ++pick)
                p += rng.small_rational() * gens[static_cast<std::size_t>(rng.below(gens.size()))];
            Polynomial q = mono(rng.monomial(g - n, g), g);
            if (!in_ideal(p * q, ctx)) ok = false;
        }
    }
    // (iii) S^2 = (-1)^g [-1]^* mod the ideal
    for (int g = 2; g <= 9; ++g) {
        GenusContext ctx = GenusContext::quotient(g);
        for (int t = 0; t < 12; ++t) {
            Polynomial p = rng.polynomial(g, g, 5);
            Polynomial lhs = fourier_S_free(fourier_S_free(p, g), g);
            Polynomial rhs = apply_inversion(p);
            if (g % 2 == 1) rhs = -rhs;
            if (normal_form(lhs, ctx) != normal_form(rhs, ctx)) ok = false;
        }
    }
    // (iv) sl2 brackets exactly, and conjugation by S in the quotient
    for (int g = 2; g <= 8; ++g) {
        const int cap = 2 * g + 2;
        GenusContext ctx = GenusContext::quotient(g);
        for (int t = 0; t < 12; ++t) {
            Polynomial p = rng.polynomial(cap, g + 3, 5);
            if (sl2_h(sl2_e(p), g) - sl2_e(sl2_h(p, g)) != Rational(2) * sl2_e(p)) ok = false;
            if (sl2_h(sl2_f(p, g), g) - sl2_f(sl2_h(p, g), g) != Rational(-2) * sl2_f(p, g))
                ok = false;
            if (sl2_e(sl2_f(p, g)) - sl2_f(sl2_e(p), g) != sl2_h(p, g)) ok = false;
            Polynomial x = normal_form(rng.polynomial(g, g, 4), ctx);
            if (fourier_S(sl2_e(fourier_S_inv(x, ctx)), ctx) != normal_form(-sl2_f(x, g), ctx))
                ok = false;
            if (fourier_S(sl2_h(fourier_S_inv(x, ctx), g), ctx) != normal_form(-sl2_h(x, g), ctx))
                ok = false;
        }
    }
    report(4, ok,
           "ideal = stabilized D-images per degree (g <= 8); closed under multiplication (100 "
           "pairs per genus); S^2 = (-1)^g [-1]^* mod ideal (g <= 9); sl2 brackets and S-"
           "conjugation (g <= 8)");
}

// 5. the higher operators commute with D and realize multiplication by p_k
void criterion_higher_operators() {
    bool ok = true;
    Rng rng(77);
    for (int g : {4, 7}) {
        const int cap = 2 * g + 2;
        for (int k = 3; k <= 5; ++k)
            for (int t = 0; t < 10; ++t) {
                Polynomial p = rng.polynomial(cap, g + 3, 5);
                if (apply_Dk(k, apply_D(p, g)) != apply_D(apply_Dk(k, p), g)) ok = false;
            }
    }
    for (int g = 2; g <= 8; ++g) {
        GenusContext ctx = GenusContext::quotient(g);
        for (int k = 2; k <= std::min(4, g); ++k)
            for (int t = 0; t < 6; ++t) {
                Polynomial f = normal_form(rng.polynomial(g, g, 4), ctx);
                Polynomial lhs =
                    fourier_S(Polynomial::variable(k, g) * fourier_S_inv(f, ctx), ctx);
                if (lhs != normal_form(apply_Dk(k + 1, f), ctx)) ok = false;
            }
    }
    report(5, ok,
           "[D_k, D] = 0 for k = 3..5 on random polynomials; S(p_k . S^{-1} F) = D_{k+1}(F) in "
           "the quotient for g <= 8, k <= 4");
}

// 6. vanishing threshold for the generators
void criterion_pn_vanishing() {
    bool ok = true;
    for (int g = 2; g <= 12; ++g) {
        GenusContext ctx = GenusContext::quotient(g);
        for (int n = (g + 3) / 2; n <= g; ++n)
            if (!in_ideal(Polynomial::variable(n, g), ctx)) ok = false;
        if (g >= 3 && in_ideal(Polynomial::variable(2, g), ctx)) ok = false;
    }
    report(6, ok,
           "p_n lies in the ideal for every n >= g/2 + 1 up to g = 12, and p_2 survives for "
           "g >= 3");
}

// 7. reduction to classes with few non-p1 factors
void criterion_reduction() {
    bool ok = true;
    long count = 0;
    for (int g = 4; g <= 9; ++g) {
        GenusContext ctx = GenusContext::quotient(g);
        for (int k = 2; 2 * k <= g; ++k)
            for_each_weight_multiset(k, g, [&](const std::vector<int>& ns) {
                long sum = 0;
                for (int v : ns) sum += v;
                for (int d = 1; d <= k - 1; ++d) {
                    if (sum + d > g) continue;
                    Polynomial lhs = x1_divided_power(static_cast<int>(g - d - sum), g);
                    for (int v : ns) lhs = lhs * Polynomial::variable(v, g);
                    Polynomial rhs = few_factor_reduction(ns, d, g);
                    if (!in_ideal(lhs - rhs, ctx)) ok = false;
                    for (const auto& [m, c] : rhs.terms())
                        if (m.factor_count() - m.x1_exponent() > d) ok = false;
                    ++count;
                }
            });
    }
    // the d = 1 closed coefficient on 20 seeded random parameter choices
    Rng rng(555);
    int done = 0;
    while (done < 20) {
        int g = static_cast<int>(rng.range(5, 9));
        int k = static_cast<int>(rng.range(2, 3));
        std::vector<int> ns;
        long sum = 0;
        for (int i = 0; i < k; ++i) {
            int v = static_cast<int>(rng.range(2, 3));
            ns.push_back(v);
            sum += v;
        }
        std::sort(ns.begin(), ns.end());
        if (sum + 1 > g) continue;
        Rational c = Rational(multinomial(ns));
        if (k % 2 == 0) c = -c;
        Polynomial expect = c * (x1_divided_power(static_cast<int>(g + k - 2 - sum), g) *
                                 Polynomial::variable(static_cast<int>(sum) - k + 1, g));
        if (few_factor_reduction(ns, 1, g) != expect) ok = false;
        ++done;
    }
    report(7, ok,
           std::to_string(count) +
               " reduction identities land in the ideal with <= d non-p1 factors (g <= 9); the "
               "d = 1 multinomial coefficient matches on 20 random parameter choices");
}

// 8. divided powers and operator expansions against iterated oracles
void criterion_oracle_equivalences() {
    bool ok = true;
    const int cap = 10;
    auto monoms = monomials_up_to(10, cap);
    for (const auto& m : monoms) {
        Polynomial p = mono(m, cap);
        long k = m.factor_count() - m.x1_exponent();
        Polynomial it = p;
        Integer fac(1);
        for (int t = 0; t <= k; ++t) {
            if (delta_divided(t, p) != Rational(Integer(1), fac) * it) ok = false;
            it = apply_Delta(it);
            fac *= (t + 1);
        }
    }
    for (int g : {5, 10}) {
        for (const auto& m : monoms) {
            Polynomial p = mono(m, cap);
            Polynomial it = p;
            Integer fac(1);
            for (int n = 0; n <= 3; ++n) {
                if (U_divided(n, p, g) != Rational(Integer(1), fac) * it) ok = false;
                it = apply_D(it, g);
                fac *= (n + 1);
            }
        }
    }
    {
        const int g = 10;
        GenusContext free_ctx = GenusContext::free_ring(g, cap);
        for (const auto& m : monoms) {
            Polynomial p = mono(m, cap);
            Polynomial rhs(cap);
            for (int l = 0; l <= g; ++l) {
                Polynomial term = U_divided(l, p, g);
                if ((g + l) % 2 == 1) term = -term;
                rhs += term;
            }
            if (exp_pontryagin(p, free_ctx) != rhs) ok = false;
        }
    }
    for (int k = 2; k <= 5; ++k)
        for (const auto& m : monoms) {
            Polynomial p = mono(m, cap);
            Polynomial rhs(cap);
            for (int t = 0; t <= k; ++t) {
                Polynomial q = p;
                for (int i = 0; i < t; ++i) q = partial(q, 1);
                rhs += apply_Delta_km(k - t, t, q);
            }
            if (apply_Dk(k, p) != rhs) ok = false;
        }
    report(8, ok,
           "Delta^[m], U^[n], the exp convolution and D_k all match their iterated or expanded "
           "oracles on every monomial of degree <= 10");
}

// 9. surjectivity of D, the J/V' decomposition and the kernel of S
void criterion_structure() {
    bool ok = true;
    for (int g = 2; g <= 8; ++g) {
        const int cap = g + 6;
        for (long n = g; n <= g + 4; ++n) {
            std::vector<Polynomial> rows;
            for (const auto& m : monomials_of_degree(n + 1, cap))
                rows.push_back(apply_D(mono(m, cap), g));
            EchelonBasis image = EchelonBasis::reduce_rows(rows, n);
            long dim = static_cast<long>(monomials_of_degree(n, cap).size());
            if (n > g && image.rank() != dim) ok = false;
            if (n == g) {
                if (image.rank() != dim - 1) ok = false;
                Monomial top = Monomial::from_exponents({g});
                for (const auto& row : rows)
                    if (!row.coefficient(top).is_zero()) ok = false;
            }
        }
    }
    for (int g = 2; g <= 9; ++g)
        for (long n = 0; n <= g; ++n) {
            EchelonBasis span(g);
            for (const auto& p : J_generators(g, n, g)) span.insert(p);
            for (const auto& m : monomials_of_degree(n, g))
                if (vprime_membership(m, g)) span.insert(mono(m, g));
            if (span.rank() != static_cast<int>(monomials_of_degree(n, g).size())) ok = false;
        }
    for (int g = 2; g <= 8; ++g) {
        std::vector<Polynomial> s_images;
        for (long m_deg = 0; m_deg <= g; ++m_deg) {
            auto rows = quotient_basis(g, m_deg).ideal.rows();
            if (rows.empty()) continue;
            std::vector<std::vector<Rational>> matrix;
            for (const auto& m : monomials_of_degree(m_deg, g)) {
                if (vprime_membership(m, g)) continue;
                std::vector<Rational> row;
                for (const auto& r : rows) row.push_back(r.coefficient(m));
                matrix.push_back(std::move(row));
            }
            for (const auto& combo : nullspace(std::move(matrix), rows.size())) {
                Polynomial elem(g);
                for (std::size_t i = 0; i < rows.size(); ++i) elem += combo[i] * rows[i];
                s_images.push_back(fourier_S_free(elem, g));
            }
        }
        for (long n = 0; n <= g; ++n) {
            EchelonBasis total = EchelonBasis::reduce_rows(J_generators(g, n, g), n);
            bool direct = true;
            EchelonBasis s_span(g);
            for (const auto& img : s_images) s_span.insert(img.graded_component(n));
            for (const auto& row : s_span.rows())
                if (!total.insert(row)) direct = false;
            if (!direct || !total.same_span(quotient_basis(g, n).ideal)) ok = false;
            if (!kernel_S(g, n, g).same_span(
                    EchelonBasis::reduce_rows(J_generators(g, n, g), n)))
                ok = false;
        }
    }
    report(9, ok,
           "D surjective above degree g with the stated top-degree image (g <= 8); V = J + V' "
           "(g <= 9); I = J (+) S(I cap V') and ker(S) = J per degree (g <= 8)");
}

// 10. combinatorial identities and the Newton conversions
void criterion_combinatorics() {
    bool ok = true;
    for (int k = 2; k <= 7; ++k)
        if (!hurwitz_check(k)) ok = false;
    for (int k = 2; k <= 6; ++k)
        if (!merge_identity_check(k)) ok = false;
    for (int m = 0; m <= 20; ++m)
        for (int n = 0; n <= 20; ++n)
            if (!alternating_binomial_check(m, n)) ok = false;
    const int g = 6, cap = 8;
    if (newton_p_to_w(Polynomial::variable(1, cap), g) !=
        parse_expression("-w1", cap, Alphabet::W))
        ok = false;
    if (newton_p_to_w(Polynomial::variable(2, cap), g) !=
        parse_expression("w2 - w1^2/2", cap, Alphabet::W))
        ok = false;
    // the w3 sign is the one forced by the defining Newton identities: the
    // specialization w_d = w1^d/d! must kill p3
    if (newton_p_to_w(Polynomial::variable(3, cap), g) !=
        parse_expression("w1*w2/2 - w3/2 - w1^3/6", cap, Alphabet::W))
        ok = false;
    for (int gg = 2; gg <= 10; ++gg)
        for (const auto& m : monomials_up_to(gg, gg)) {
            Polynomial p = mono(m, gg);
            if (newton_w_to_p(newton_p_to_w(p, gg), gg) != p) ok = false;
        }
    report(10, ok,
           "two-block identity (k <= 7), merge identity (k <= 6), alternating binomial sum "
           "(m, n <= 20), and the Newton conversions for p1, p2, p3 with round trips to g = 10");
}

// 11. wall-clock budget for the verification suites
void criterion_performance() {
    CheckOptions opts;
    opts.genus_min = 2;
    opts.golden_dir = TAUTJAC_GOLDEN_DIR;

    auto t0 = std::chrono::steady_clock::now();
    opts.genus_max = 10;
    auto r10 = run_suite("all", opts);
    double dt10 = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    opts.genus_max = 12;
    auto r12 = run_suite("all", opts);
    double dt12 = seconds_since(t0);

    bool ok = dt10 < 60.0 && dt12 < 300.0;
    std::ostringstream os;
    os << "full verification sweep: g <= 10 in " << dt10 << " s (< 60), g <= 12 in " << dt12
       << " s (< 300); " << r10.size() << " and " << r12.size() << " identities";
    report(11, ok, os.str());
}

}  // namespace

int main() {
    criterion_golden_tables();
    criterion_main_relations();
    criterion_fourier_closed_form();
    criterion_ring_structure();
    criterion_higher_operators();
    criterion_pn_vanishing();
    criterion_reduction();
    criterion_oracle_equivalences();
    criterion_structure();
    criterion_combinatorics();
    criterion_performance();
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
