#include "taut/partitions.hpp"

#include <stdexcept>

namespace taut {

namespace {

void rgs_recurse(int k, int m, int pos, int used, std::vector<int>& rgs,
                 std::vector<SetPartition>& out) {
    if (used + (k - pos) < m) return;  // cannot open enough blocks anymore
    if (pos == k) {
        if (used != m) return;
        SetPartition part;
        part.blocks.assign(static_cast<std::size_t>(m), {});
        for (int i = 0; i < k; ++i) part.blocks[static_cast<std::size_t>(rgs[i])].push_back(i + 1);
        out.push_back(std::move(part));
        return;
    }
    // restricted growth: label v <= used, where v == used opens a block
    int hi = std::min(used, m - 1);
    for (int v = 0; v <= hi; ++v) {
        rgs[pos] = v;
        rgs_recurse(k, m, pos + 1, v == used ? used + 1 : used, rgs, out);
    }
}

}  // namespace

std::vector<SetPartition> set_partitions(int k, int m) {
    std::vector<SetPartition> out;
    if (k < 1 || m < 1 || m > k) return out;
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    rgs_recurse(k, m, 0, 0, rgs, out);
    return out;
}

long stirling2(int k, int m) {
    if (k == 0 && m == 0) return 1;
    if (k <= 0 || m <= 0 || m > k) return 0;
    return stirling2(k - 1, m - 1) + static_cast<long>(m) * stirling2(k - 1, m);
}

Integer block_b(const std::vector<int>& ns, const std::vector<int>& block) {
    if (block.empty()) throw std::invalid_argument("block_b: empty block");
    std::vector<int> parts;
    parts.reserve(block.size());
    for (int i : block) {
        if (i < 1 || i > static_cast<int>(ns.size()))
            throw std::invalid_argument("block_b: index out of range");
        parts.push_back(ns[static_cast<std::size_t>(i) - 1]);
    }
    return multinomial(parts);
}

int block_d(const std::vector<int>& ns, const std::vector<int>& block) {
    if (block.empty()) throw std::invalid_argument("block_d: empty block");
    int sum = 0;
    for (int i : block) {
        if (i < 1 || i > static_cast<int>(ns.size()))
            throw std::invalid_argument("block_d: index out of range");
        sum += ns[static_cast<std::size_t>(i) - 1];
    }
    return sum - static_cast<int>(block.size()) + 1;
}

namespace {

// sum of u_i over a subset encoded by bits, as a linear polynomial
Polynomial subset_sum(unsigned mask, int k) {
    Polynomial s(kNoCap);
    for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) s += Polynomial::variable(i + 1, kNoCap);
    return s;
}

Polynomial falling_factorial(const Polynomial& u, int n) {
    Polynomial r = Polynomial::constant(Rational(1), kNoCap);
    for (int t = 0; t < n; ++t) r = r * (u - Polynomial::constant(Rational(t), kNoCap));
    return r;
}

}  // namespace

bool hurwitz_check(int k) {
    if (k < 2) throw std::invalid_argument("hurwitz_check: k must be >= 2");
    Polynomial lhs(kNoCap);
    unsigned full = (1u << k) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        Polynomial ui = subset_sum(mask, k);
        Polynomial uj = subset_sum(full & ~mask, k);
        lhs += pow(ui, __builtin_popcount(mask) - 1) *
               pow(uj, k - __builtin_popcount(mask) - 1);
    }
    Polynomial rhs = Rational(2 * (k - 1)) * pow(subset_sum(full, k), k - 2);
    return lhs == rhs;
}

bool merge_identity_check(int k) {
    if (k < 2) throw std::invalid_argument("merge_identity_check: k must be >= 2");
    Polynomial lhs(kNoCap);
    unsigned full = (1u << k) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        Polynomial a = falling_factorial(subset_sum(mask, k), __builtin_popcount(mask) - 1);
        Polynomial b =
            falling_factorial(subset_sum(full & ~mask, k), k - __builtin_popcount(mask) - 1);
        lhs += a * b;
    }
    Polynomial rhs = Rational(2 * (k - 1)) * falling_factorial(subset_sum(full, k), k - 2);
    return lhs == rhs;
}

bool alternating_binomial_check(int m, int n) {
    Rational sum(0);
    for (int l = 0; l <= n; ++l)
        sum += binomial(Rational(-m - 1), n - l) * binomial(Rational(m), l);
    return sum == Rational((n % 2 == 0) ? 1 : -1);
}

}  // namespace taut
