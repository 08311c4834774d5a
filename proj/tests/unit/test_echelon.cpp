#include "taut/echelon.hpp"
#include "taut/rng.hpp"
#include "taut/tautring.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace taut;

namespace {

// independent dense eliminator over an explicit monomial basis
long dense_rank(const std::vector<Polynomial>& rows, long degree, int cap) {
    std::vector<Monomial> basis = monomials_of_degree(degree, cap);
    std::map<Monomial, std::size_t, CanonicalLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) {
        std::vector<Rational> v(basis.size(), Rational(0));
        for (const auto& [mono, c] : r.terms()) v[index.at(mono)] = c;
        m.push_back(std::move(v));
    }
    long rank = 0;
    std::size_t col = 0;
    for (std::size_t row = 0; row < m.size() && col < basis.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < basis.size(); ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("reduction of a two-row span") {
    int cap = 5;
    Polynomial p2sq = Polynomial::variable(2, cap) * Polynomial::variable(2, cap);
    Polynomial mixed = p2sq + Rational(6) * (Polynomial::variable(1, cap) *
                                             Polynomial::variable(3, cap));
    EchelonBasis b = EchelonBasis::reduce_rows({p2sq, mixed}, 4);
    CHECK(b.rank() == 2);
    auto pivots = b.pivot_monomials();
    CHECK(std::count(pivots.begin(), pivots.end(), Monomial::from_exponents({0, 2})) == 1);
    CHECK(std::count(pivots.begin(), pivots.end(), Monomial::from_exponents({1, 0, 1})) == 1);
    CHECK(b.contains(mixed));
    CHECK(b.contains(Polynomial::variable(1, cap) * Polynomial::variable(3, cap)));
}

TEST_CASE("degenerate spans") {
    Polynomial zero(6);
    EchelonBasis empty = EchelonBasis::reduce_rows({zero}, 3);
    CHECK(empty.rank() == 0);
    Polynomial p3 = Polynomial::variable(3, 6);
    EchelonBasis single = EchelonBasis::reduce_rows({p3, Rational(2) * p3}, 3);
    CHECK(single.rank() == 1);
    CHECK(single.rows().front() == p3);
}

TEST_CASE("inhomogeneous rows are rejected") {
    Polynomial p = Polynomial::variable(1, 6) + Polynomial::variable(2, 6);
    CHECK_THROWS_AS(EchelonBasis::reduce_rows({p}, 2), std::invalid_argument);
}

TEST_CASE("rank matches a dense eliminator and is order-independent") {
    Rng rng(23);
    const int cap = 8;
    for (int trial = 0; trial < 20; ++trial) {
        long degree = rng.range(3, 7);
        std::vector<Polynomial> rows;
        for (int i = 0; i < 6; ++i) {
            Polynomial p(cap);
            for (const auto& m : monomials_of_degree(degree, cap))
                if (rng.below(3) == 0) p.add_term(m, rng.small_rational());
            rows.push_back(p);
        }
        EchelonBasis forward = EchelonBasis::reduce_rows(rows, degree);
        CHECK(forward.rank() == dense_rank(rows, degree, cap));
        std::vector<Polynomial> shuffled(rows.rbegin(), rows.rend());
        EchelonBasis backward = EchelonBasis::reduce_rows(shuffled, degree);
        CHECK(forward.same_span(backward));
        CHECK(forward.rows() == backward.rows());  // reduced form is unique
        for (const auto& r : rows) CHECK(forward.contains(r));
        // each pivot is monic in its own row and absent from every other
        auto basis_rows = forward.rows();
        auto pivots = forward.pivot_monomials();
        for (std::size_t i = 0; i < basis_rows.size(); ++i)
            for (std::size_t j = 0; j < pivots.size(); ++j)
                CHECK(basis_rows[i].coefficient(pivots[j]) ==
                      (i == j ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("nullspace of a small exact system") {
    // rows: x + y + z = 0, x - z = 0  ->  kernel spanned by (1, -2, 1)
    std::vector<std::vector<Rational>> rows = {
        {Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(0), Rational(-1)},
    };
    auto kernel = nullspace(rows, 3);
    REQUIRE(kernel.size() == 1);
    Rational x = kernel[0][0], y = kernel[0][1], z = kernel[0][2];
    CHECK(x + y + z == Rational(0));
    CHECK(x - z == Rational(0));
    CHECK(!(x.is_zero() && y.is_zero() && z.is_zero()));
}
