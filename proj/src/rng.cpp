#include "taut/rng.hpp"

namespace taut {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational Rng::small_rational() {
    long num = range(-9, 9);
    long den = range(1, 4);
    return Rational(num, den);
}

Monomial Rng::monomial(long max_degree, int max_index) {
    long budget = range(0, max_degree);
    std::vector<int> exps;
    while (budget >= 1) {
        int i = static_cast<int>(range(1, std::min<long>(max_index, budget)));
        if (static_cast<int>(exps.size()) < i) exps.resize(static_cast<std::size_t>(i), 0);
        ++exps[static_cast<std::size_t>(i) - 1];
        budget -= i;
    }
    return Monomial::from_exponents(std::move(exps));
}

Polynomial Rng::polynomial(int cap, long max_degree, int terms) {
    Polynomial p(cap);
    for (int t = 0; t < terms; ++t) {
        Rational c = small_rational();
        if (c.is_zero()) c = Rational(1);
        p.add_term(monomial(max_degree, static_cast<int>(std::min<long>(cap, max_degree))), c);
    }
    return p;
}

}  // namespace taut
