#pragma once

#include "taut/polynomial.hpp"

#include <map>
#include <vector>

namespace taut {

// Reduced echelon basis of a span of polynomials of a single weighted degree.
// Each row is monic in its pivot (the row's largest monomial in canonical
// order), the pivot occurs in no other row, and rows are kept fully
// back-substituted, so the representation of a subspace is unique and
// span comparison is plain equality.
class EchelonBasis {
public:
    explicit EchelonBasis(int cap) : cap_(cap) {}

    // Row-reduces the given spanning set. Every nonzero input must be
    // homogeneous of weighted degree n; anything else is rejected.
    static EchelonBasis reduce_rows(const std::vector<Polynomial>& rows, long n);

    // Inserts one polynomial into the span. Returns true if the rank grew.
    bool insert(Polynomial p);

    // Remainder of p after eliminating every pivot.
    Polynomial reduce(Polynomial p) const;

    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
    bool contains_all(const EchelonBasis& other) const;
    bool same_span(const EchelonBasis& other) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int cap() const { return cap_; }

    std::vector<Polynomial> rows() const;       // sorted by pivot, canonical order
    std::vector<Monomial> pivot_monomials() const;
    bool is_pivot(const Monomial& m) const { return rows_.count(m) != 0; }

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
        return a.cap_ == b.cap_ && a.rows_ == b.rows_;
    }

private:
    int cap_;
    std::map<Monomial, Polynomial, CanonicalLess> rows_;  // pivot -> row
};

// Dense exact nullspace: basis of { c : sum_j c_j * column_j = 0 } for the
// matrix given by rows. Deterministic; free columns are taken in ascending
// index order.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t ncols);

}  // namespace taut
