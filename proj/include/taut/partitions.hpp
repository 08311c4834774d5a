#pragma once

#include "taut/polynomial.hpp"
#include "taut/rational.hpp"

#include <vector>

namespace taut {

// Partition of {1..k} into disjoint nonempty blocks. Each block is sorted and
// blocks are ordered by least element, so two partitions differing only by
// the ordering of parts compare equal.
struct SetPartition {
    std::vector<std::vector<int>> blocks;  // 1-based indices

    int block_count() const { return static_cast<int>(blocks.size()); }
    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.blocks == b.blocks;
    }
};

// All partitions of {1..k} into exactly m blocks, in restricted growth
// string order. Empty for m outside [1, k].
std::vector<SetPartition> set_partitions(int k, int m);

// Stirling numbers of the second kind via the recurrence; test oracle for
// the enumeration above.
long stirling2(int k, int m);

// For weights ns = (n_1..n_k) and a block I of 1-based indices:
//   b(I) = (sum_{i in I} n_i)! / prod_{i in I} n_i!
//   d(I) = sum_{i in I} n_i - |I| + 1
// Empty blocks are rejected.
Integer block_b(const std::vector<int>& ns, const std::vector<int>& block);
int block_d(const std::vector<int>& ns, const std::vector<int>& block);

// Hurwitz identity, fully expanded over u_1..u_k:
//   sum over ordered splittings [1,k] = I ⊔ J of nonempty sets of
//   (sum_I u)^(|I|-1) (sum_J u)^(|J|-1)  ==  2(k-1) (sum u)^(k-2).
bool hurwitz_check(int k);

// Falling-factorial form of the two-block merge identity behind the divided
// powers of Delta, checked as a polynomial identity in u_1..u_k:
//   sum over ordered splittings of P_{|I|-1}(sum_I u) P_{|J|-1}(sum_J u)
//   == 2(k-1) P_{k-2}(sum u),  P_n(u) = u(u-1)...(u-n+1).
bool merge_identity_check(int k);

// sum_{l=0}^{n} binom(-m-1, n-l) binom(m, l) == (-1)^n.
bool alternating_binomial_check(int m, int n);

inline constexpr int kDefaultHurwitzBound = 7;

}  // namespace taut
