#include "taut/echelon.hpp"

#include <stdexcept>

namespace taut {

EchelonBasis EchelonBasis::reduce_rows(const std::vector<Polynomial>& rows, long n) {
    int cap = rows.empty() ? static_cast<int>(n) : rows.front().cap();
    EchelonBasis basis(cap);
    for (const auto& r : rows) {
        if (r.cap() != cap) throw std::invalid_argument("row_reduce: cap mismatch");
        if (!r.homogeneous_of(n))
            throw std::invalid_argument("row_reduce: inhomogeneous input row");
        basis.insert(r);
    }
    return basis;
}

bool EchelonBasis::insert(Polynomial p) {
    if (p.cap() != cap_) throw std::invalid_argument("EchelonBasis::insert: cap mismatch");
    p = reduce(std::move(p));
    if (p.is_zero()) return false;
    const Monomial pivot = p.pivot_monomial();
    p *= Rational(1) / p.coefficient(pivot);
    // keep the reduced form: eliminate the new pivot from existing rows
    for (auto& [m, row] : rows_) {
        Rational c = row.coefficient(pivot);
        if (!c.is_zero()) row -= c * p;
    }
    rows_.emplace(pivot, std::move(p));
    return true;
}

Polynomial EchelonBasis::reduce(Polynomial p) const {
    if (p.cap() != cap_) throw std::invalid_argument("EchelonBasis::reduce: cap mismatch");
    // rows are mutually reduced, so one pass over the pivots suffices
    for (const auto& [pivot, row] : rows_) {
        Rational c = p.coefficient(pivot);
        if (!c.is_zero()) p -= c * row;
    }
    return p;
}

bool EchelonBasis::contains_all(const EchelonBasis& other) const {
    for (const auto& [pivot, row] : other.rows_)
        if (!contains(row)) return false;
    return true;
}

bool EchelonBasis::same_span(const EchelonBasis& other) const {
    // reduced echelon form is unique per subspace, so spans agree iff rows do
    return rows_ == other.rows_;
}

std::vector<Polynomial> EchelonBasis::rows() const {
    std::vector<Polynomial> out;
    out.reserve(rows_.size());
    for (const auto& [m, row] : rows_) out.push_back(row);
    return out;
}

std::vector<Monomial> EchelonBasis::pivot_monomials() const {
    std::vector<Monomial> out;
    out.reserve(rows_.size());
    for (const auto& [m, row] : rows_) out.push_back(m);
    return out;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t ncols) {
    for (const auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("nullspace: ragged matrix");

    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot_col(ncols, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = Rational(1) / rows[rank][col];
        for (std::size_t j = col; j < ncols; ++j) rows[rank][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank) continue;
            Rational f = rows[i][col];
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivot_col_of_row.push_back(static_cast<long>(col));
        is_pivot_col[col] = true;
        ++rank;
    }

    std::vector<std::vector<Rational>> kernel;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < rank; ++r) {
            std::size_t pc = static_cast<std::size_t>(pivot_col_of_row[r]);
            v[pc] = -rows[r][free_col];
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace taut
