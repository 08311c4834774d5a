#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

namespace taut {

// A monomial x_1^{e_1} x_2^{e_2} ... with weighted degree sum(i * e_i).
// Exponent vectors are normalized: no trailing zeros, so equality is plain
// vector equality.
class Monomial {
public:
    Monomial() = default;  // the monomial 1

    static Monomial variable(int index);  // x_index, index >= 1
    static Monomial from_exponents(std::vector<int> exps);

    int exponent(int index) const;  // exponent of x_index
    int max_index() const { return static_cast<int>(e_.size()); }
    bool is_one() const { return e_.empty(); }

    long weighted_degree() const;

    // Number of variable factors counted with multiplicity.
    long factor_count() const;

    // Decomposition x_1^a * x_{n_1} ... x_{n_k} with n_i >= 2.
    int x1_exponent() const { return e_.empty() ? 0 : e_[0]; }
    std::vector<int> parts_ge2() const;  // [n_1..n_k] ascending, with multiplicity

    // Beauville weight s: a monomial of codimension d with k non-x_1 factors
    // n_1..n_k has s = sum(n_i) - k.
    long beauville_weight() const;

    Monomial times(const Monomial& o) const;
    Monomial with_extra(int index, int delta) const;  // exponent shift, may hit zero

    const std::vector<int>& exponents() const { return e_; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

private:
    std::vector<int> e_;
    void normalize();
};

// Canonical total order: by weighted degree, then lexicographically on
// (e_1, e_2, ...) with the larger exponent ordered earlier. Pivot selection
// and all deterministic iteration rely on this order; the last monomial of a
// set under it is the elimination pivot.
bool canonical_less(const Monomial& a, const Monomial& b);

// Emission order: degree ascending, tie broken with smaller e_1 first so the
// pivot-side term of a relation leads. Used by every printer.
bool display_less(const Monomial& a, const Monomial& b);

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace taut
