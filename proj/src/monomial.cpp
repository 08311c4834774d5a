#include "taut/monomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace taut {

void Monomial::normalize() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

Monomial Monomial::variable(int index) {
    if (index < 1) throw std::invalid_argument("Monomial::variable: index must be >= 1");
    Monomial m;
    m.e_.assign(static_cast<std::size_t>(index), 0);
    m.e_[static_cast<std::size_t>(index) - 1] = 1;
    return m;
}

Monomial Monomial::from_exponents(std::vector<int> exps) {
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    Monomial m;
    m.e_ = std::move(exps);
    m.normalize();
    return m;
}

int Monomial::exponent(int index) const {
    if (index < 1 || index > max_index()) return 0;
    return e_[static_cast<std::size_t>(index) - 1];
}

long Monomial::weighted_degree() const {
    long d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<long>(i + 1) * e_[i];
    return d;
}

long Monomial::factor_count() const {
    long k = 0;
    for (int e : e_) k += e;
    return k;
}

std::vector<int> Monomial::parts_ge2() const {
    std::vector<int> parts;
    for (std::size_t i = 1; i < e_.size(); ++i)
        for (int c = 0; c < e_[i]; ++c) parts.push_back(static_cast<int>(i + 1));
    return parts;
}

long Monomial::beauville_weight() const {
    long s = 0;
    for (std::size_t i = 1; i < e_.size(); ++i) s += static_cast<long>(i) * e_[i];
    return s;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m;
    m.e_.resize(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < m.e_.size(); ++i) {
        int a = i < e_.size() ? e_[i] : 0;
        int b = i < o.e_.size() ? o.e_[i] : 0;
        m.e_[i] = a + b;
    }
    m.normalize();
    return m;
}

Monomial Monomial::with_extra(int index, int delta) const {
    if (index < 1) throw std::invalid_argument("Monomial::with_extra: index must be >= 1");
    Monomial m(*this);
    if (static_cast<int>(m.e_.size()) < index) m.e_.resize(static_cast<std::size_t>(index), 0);
    int& e = m.e_[static_cast<std::size_t>(index) - 1];
    if (e + delta < 0) throw std::invalid_argument("Monomial::with_extra: exponent underflow");
    e += delta;
    m.normalize();
    return m;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    long da = a.weighted_degree(), db = b.weighted_degree();
    if (da != db) return da < db;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::size_t n = std::max(ea.size(), eb.size());
    for (std::size_t i = 0; i < n; ++i) {
        int xa = i < ea.size() ? ea[i] : 0;
        int xb = i < eb.size() ? eb[i] : 0;
        if (xa != xb) return xa > xb;  // larger e_i ordered earlier
    }
    return false;
}

bool display_less(const Monomial& a, const Monomial& b) {
    long da = a.weighted_degree(), db = b.weighted_degree();
    if (da != db) return da < db;
    return canonical_less(b, a);
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    if (m.is_one()) return os << "1";
    bool first = true;
    for (int i = 1; i <= m.max_index(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << i;
        if (e > 1) os << "^" << e;
    }
    return os;
}

}  // namespace taut
