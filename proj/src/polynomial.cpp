#include "taut/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace taut {

Polynomial Polynomial::constant(const Rational& c, int cap) {
    Polynomial p(cap);
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, int cap) {
    Polynomial p(cap);
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(int index, int cap) {
    return monomial(Monomial::variable(index), Rational(1), cap);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero() || m.weighted_degree() > cap_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void require_same_cap(const Polynomial& a, const Polynomial& b) {
    if (a.cap() != b.cap())
        throw std::invalid_argument("polynomial cap mismatch: " + std::to_string(a.cap()) +
                                    " vs " + std::to_string(b.cap()));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_cap(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_cap(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_cap(a, b);
    Polynomial r(a.cap());
    for (const auto& [ma, ca] : a.terms_) {
        long da = ma.weighted_degree();
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mb.weighted_degree() > a.cap()) continue;
            r.add_term(ma.times(mb), ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree());
    return d;
}

bool Polynomial::homogeneous_of(long n) const {
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree() != n) return false;
    return true;
}

Polynomial Polynomial::graded_component(long n) const {
    Polynomial r(cap_);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree() == n) r.add_term(m, c);
    return r;
}

const Monomial& Polynomial::pivot_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("pivot_monomial of zero polynomial");
    return terms_.rbegin()->first;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::display_terms() const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return display_less(a.first, b.first); });
    return out;
}

Polynomial pow(const Polynomial& base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow: negative exponent");
    Polynomial r = Polynomial::constant(Rational(1), base.cap());
    for (int i = 0; i < exp; ++i) r = r * base;
    return r;
}

Polynomial x1_divided_power(int t, int cap) {
    if (t < 0) return Polynomial::zero(cap);
    return Polynomial::monomial(Monomial::from_exponents({t}), Rational(Integer(1), factorial(t)),
                                cap);
}

Polynomial substitute(const Polynomial& p, const std::function<Polynomial(int)>& image, int cap) {
    Polynomial out(cap);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(c, cap);
        for (int i = 1; i <= m.max_index(); ++i)
            for (int rep = 0; rep < m.exponent(i); ++rep) term = term * image(i);
        out += term;
    }
    return out;
}

}  // namespace taut
