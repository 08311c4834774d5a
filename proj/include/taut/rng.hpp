#pragma once

#include "taut/polynomial.hpp"

#include <cstdint>

namespace taut {

// Seeded deterministic generator (splitmix64). The verification suites must
// produce identical streams on every platform, so the standard library
// engines and distributions are avoided.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);          // uniform in [0, n)
    long range(long lo, long hi);                  // uniform in [lo, hi]

    Rational small_rational();                     // num in [-9,9], den in [1,4]
    Monomial monomial(long max_degree, int max_index);
    Polynomial polynomial(int cap, long max_degree, int terms);

private:
    std::uint64_t state_;
};

}  // namespace taut
