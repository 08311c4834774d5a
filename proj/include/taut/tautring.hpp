#pragma once

#include "taut/echelon.hpp"
#include "taut/polynomial.hpp"

#include <vector>

namespace taut {

enum class RingMode { Free, Quotient };

// Computation context: genus, ring mode and the degree cap. In quotient mode
// the cap is g, because every x_i with i > g already lies in the ideal; in
// the free ring the cap is configurable so identities can be checked
// degreewise below it.
struct GenusContext {
    int genus = 2;
    RingMode mode = RingMode::Quotient;
    int cap = 2;

    static GenusContext quotient(int g);
    static GenusContext free_ring(int g, int cap = -1);  // default cap 2g+2
};

// All monomials of weighted degree n in variables x_1..x_cap, sorted in
// canonical order.
std::vector<Monomial> monomials_of_degree(long n, int cap);

// Degree-n slice of the relation ideal I_g together with the complementary
// standard monomials of the quotient ring.
struct DegreeBasis {
    EchelonBasis ideal;
    std::vector<Monomial> standard_monomials;
    DegreeBasis() : ideal(0) {}
};

// Spanning set of the degree-n component of I_g: for n > g every monomial of
// degree n (within cap); for n <= g the family D^[g-n](M) over monomials M of
// weighted degree g other than x_1^g.
std::vector<Polynomial> ideal_generators(int g, long n, int cap);

// Reduced basis of I_g ∩ V_n plus standard monomials, cached per (g, n).
// The cache is shared, internally synchronized and never invalidated.
const DegreeBasis& quotient_basis(int g, long n);

// Unique representative of p mod I_g supported on standard monomials.
// Linear and idempotent; graded components above g vanish.
Polynomial normal_form(const Polynomial& p, const GenusContext& ctx);

bool in_ideal(const Polynomial& p, const GenusContext& ctx);

struct DimensionRow {
    long degree;
    long dim_ideal;
    long dim_ring;
    long dim_space;
};

// Exact dimensions of I_g ∩ V_n and of the quotient per degree 0..g.
std::vector<DimensionRow> dimension_table(int g);

// V' membership: x_1^a x_{n_1}..x_{n_k} with a + k + sum n_i <= g.
bool vprime_membership(const Monomial& m, int g);

// Degree-n spanning set of the subspace J: all monomials for n > g,
// otherwise D^[g-n](x_1^[g-sum n_i] x_{n_1}..x_{n_k}) over all k >= 1,
// n_i > 1 with sum n_i <= n.
std::vector<Polynomial> J_generators(int g, long n, int cap);

// Exact kernel of the Fourier transform restricted to degree n.
EchelonBasis kernel_S(int g, long n, int cap);

// Configured bound for exhaustive per-genus operations; partition counts per
// degree stay desk-scale (77 at degree 12).
inline constexpr int kDefaultMaxGenus = 12;

}  // namespace taut
