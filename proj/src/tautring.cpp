#include "taut/tautring.hpp"

#include "taut/fourier.hpp"
#include "taut/operators.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace taut {

GenusContext GenusContext::quotient(int g) {
    if (g < 2) throw std::invalid_argument("GenusContext: genus must be >= 2");
    return {g, RingMode::Quotient, g};
}

GenusContext GenusContext::free_ring(int g, int cap) {
    if (g < 2) throw std::invalid_argument("GenusContext: genus must be >= 2");
    if (cap < 0) cap = 2 * g + 2;
    return {g, RingMode::Free, cap};
}

namespace {

void enumerate_partitions(long n, int max_part, std::vector<int>& acc,
                          std::vector<Monomial>& out) {
    if (n == 0) {
        std::vector<int> exps;
        for (int part : acc) {
            if (static_cast<int>(exps.size()) < part) exps.resize(static_cast<std::size_t>(part), 0);
            ++exps[static_cast<std::size_t>(part) - 1];
        }
        out.push_back(Monomial::from_exponents(std::move(exps)));
        return;
    }
    for (int part = std::min<long>(max_part, n); part >= 1; --part) {
        acc.push_back(part);
        enumerate_partitions(n - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(long n, int cap) {
    std::vector<Monomial> out;
    if (n < 0 || n > cap) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> acc;
    enumerate_partitions(n, static_cast<int>(std::min<long>(n, cap)), acc, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Polynomial> ideal_generators(int g, long n, int cap) {
    std::vector<Polynomial> gens;
    if (n < 0) return gens;
    if (n > g) {
        for (const auto& m : monomials_of_degree(n, cap))
            gens.push_back(Polynomial::monomial(m, Rational(1), cap));
        return gens;
    }
    Monomial top = Monomial::from_exponents({g});
    for (const auto& m : monomials_of_degree(g, cap)) {
        if (m == top) continue;
        Polynomial seed = Polynomial::monomial(m, Rational(1), cap);
        gens.push_back(d_divided(static_cast<int>(g - n), seed, g));
    }
    return gens;
}

namespace {

struct QuotientCache {
    std::shared_mutex mutex;
    std::map<std::pair<int, long>, std::unique_ptr<DegreeBasis>> entries;

    static QuotientCache& instance() {
        static QuotientCache cache;
        return cache;
    }
};

std::unique_ptr<DegreeBasis> compute_degree_basis(int g, long n) {
    auto basis = std::make_unique<DegreeBasis>();
    basis->ideal = EchelonBasis::reduce_rows(ideal_generators(g, n, g), n);
    for (const auto& m : monomials_of_degree(n, g))
        if (!basis->ideal.is_pivot(m)) basis->standard_monomials.push_back(m);
    return basis;
}

}  // namespace

const DegreeBasis& quotient_basis(int g, long n) {
    if (g < 2) throw std::invalid_argument("quotient_basis: genus must be >= 2");
    if (n < 0 || n > g) throw std::invalid_argument("quotient_basis: degree out of range");
    auto& cache = QuotientCache::instance();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.entries.find({g, n});
        if (it != cache.entries.end()) return *it->second;
    }
    auto fresh = compute_degree_basis(g, n);
    std::unique_lock lock(cache.mutex);
    auto [it, inserted] = cache.entries.emplace(std::make_pair(g, n), std::move(fresh));
    // concurrent first computation is idempotent: results are identical
    return *it->second;
}

Polynomial normal_form(const Polynomial& p, const GenusContext& ctx) {
    Polynomial out(p.cap());
    int g = ctx.genus;
    for (long n = 0; n <= std::min<long>(p.degree(), g); ++n) {
        Polynomial comp = p.graded_component(n);
        if (comp.is_zero()) continue;
        // reduce in the quotient cap, then transport back
        Polynomial local(g);
        for (const auto& [m, c] : comp.terms()) local.add_term(m, c);
        local = quotient_basis(g, n).ideal.reduce(local);
        for (const auto& [m, c] : local.terms()) out.add_term(m, c);
    }
    return out;
}

bool in_ideal(const Polynomial& p, const GenusContext& ctx) {
    return normal_form(p, ctx).is_zero();
}

std::vector<DimensionRow> dimension_table(int g) {
    std::vector<DimensionRow> rows;
    for (long n = 0; n <= g; ++n) {
        const auto& basis = quotient_basis(g, n);
        long space = static_cast<long>(monomials_of_degree(n, g).size());
        long ideal = basis.ideal.rank();
        rows.push_back({n, ideal, space - ideal, space});
    }
    return rows;
}

bool vprime_membership(const Monomial& m, int g) {
    long a = m.x1_exponent();
    long k = m.factor_count() - a;
    long sum = m.weighted_degree() - a;
    return a + k + sum <= g;
}

std::vector<Polynomial> J_generators(int g, long n, int cap) {
    std::vector<Polynomial> gens;
    if (n < 0) return gens;
    if (n > g) {
        for (const auto& m : monomials_of_degree(n, cap))
            gens.push_back(Polynomial::monomial(m, Rational(1), cap));
        return gens;
    }
    int d = static_cast<int>(g - n);
    // seeds x_1^[g - sum n_i] x_{n_1}..x_{n_k} over k >= 1, n_i > 1, sum <= n
    for (const auto& m : monomials_of_degree(g, cap)) {
        std::vector<int> ns = m.parts_ge2();
        if (ns.empty()) continue;
        long sum = 0;
        for (int v : ns) sum += v;
        if (sum > n) continue;  // the d + sum <= g constraint
        Polynomial seed = Polynomial::monomial(
            m, Rational(Integer(1), factorial(m.x1_exponent())), cap);
        gens.push_back(d_divided(d, seed, g));
    }
    return gens;
}

EchelonBasis kernel_S(int g, long n, int cap) {
    if (n > cap) throw std::invalid_argument("kernel_S: degree above cap");
    std::vector<Monomial> basis = monomials_of_degree(n, cap);
    if (n > g) {
        std::vector<Polynomial> all;
        for (const auto& m : basis) all.push_back(Polynomial::monomial(m, Rational(1), cap));
        return EchelonBasis::reduce_rows(all, n);
    }
    // columns: monomials of V_n; rows: monomials appearing in their images
    std::vector<Polynomial> images;
    std::map<Monomial, std::size_t, CanonicalLess> row_index;
    for (const auto& m : basis) {
        Polynomial img = fourier_S_free(Polynomial::monomial(m, Rational(1), cap), g);
        for (const auto& [mm, c] : img.terms()) row_index.emplace(mm, 0);
        images.push_back(std::move(img));
    }
    std::size_t nrows = 0;
    for (auto& [mm, idx] : row_index) idx = nrows++;
    std::vector<std::vector<Rational>> matrix(nrows,
                                              std::vector<Rational>(basis.size(), Rational(0)));
    for (std::size_t col = 0; col < images.size(); ++col)
        for (const auto& [mm, c] : images[col].terms()) matrix[row_index.at(mm)][col] = c;

    std::vector<Polynomial> kernel_rows;
    for (const auto& vec : nullspace(std::move(matrix), basis.size())) {
        Polynomial p(cap);
        for (std::size_t j = 0; j < basis.size(); ++j) p.add_term(basis[j], vec[j]);
        kernel_rows.push_back(std::move(p));
    }
    return EchelonBasis::reduce_rows(kernel_rows, n);
}

}  // namespace taut
