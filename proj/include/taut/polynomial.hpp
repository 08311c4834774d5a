#pragma once

#include "taut/monomial.hpp"
#include "taut/rational.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace taut {

// Degree cap used for symbolic work where truncation must never fire.
inline constexpr int kNoCap = 1 << 20;

// Sparse polynomial over the rationals, graded by weighted degree and
// truncated at a fixed cap. No stored coefficient is zero and no stored
// monomial exceeds the cap. Values are immutable in spirit: operations
// return fresh polynomials and never share term maps.
class Polynomial {
public:
    explicit Polynomial(int cap) : cap_(cap) {}

    static Polynomial zero(int cap) { return Polynomial(cap); }
    static Polynomial constant(const Rational& c, int cap);
    static Polynomial monomial(const Monomial& m, const Rational& c, int cap);
    static Polynomial variable(int index, int cap);  // x_index, zero if index > cap

    int cap() const { return cap_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational, CanonicalLess>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;

    // Adds c * m, dropping the term if it cancels or exceeds the cap.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

    long degree() const;                  // max weighted degree, -1 for zero
    bool homogeneous_of(long n) const;    // zero counts as homogeneous of any degree
    Polynomial graded_component(long n) const;

    // Largest monomial in canonical order; the elimination pivot.
    const Monomial& pivot_monomial() const;

    // Terms sorted for emission (degree ascending, pivot side last per degree
    // block reversed; see display_less).
    std::vector<std::pair<Monomial, Rational>> display_terms() const;

private:
    int cap_;
    std::map<Monomial, Rational, CanonicalLess> terms_;
};

void require_same_cap(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, int exp);

// x_1^t / t!; zero polynomial for t < 0.
Polynomial x1_divided_power(int t, int cap);

// Replaces every variable x_i by image(i) and multiplies out, truncating at
// the target cap. Used by the Newton-identity basis conversions.
Polynomial substitute(const Polynomial& p, const std::function<Polynomial(int)>& image, int cap);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace taut
