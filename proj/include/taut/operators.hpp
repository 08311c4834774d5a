#pragma once

#include "taut/polynomial.hpp"

#include <functional>
#include <string>

namespace taut {

// The differential operators acting on Q[x_1, x_2, ...]. All of them are
// implemented monomial by monomial with exact coefficients; no operator
// matrix is ever formed here (rank checks build per-degree matrices on
// demand elsewhere).

Polynomial partial(const Polynomial& p, int index);  // d/dx_index

// D = -g d_1 + (1/2) sum_{m,n>=1} binom(m+n, m) x_{m+n-1} d_m d_n.
// Lowers weighted degree by exactly 1.
Polynomial apply_D(const Polynomial& p, int g);

// Delta = (1/2) sum_{m,n>=2} binom(m+n, m) x_{m+n-1} d_m d_n; x_1 is inert.
Polynomial apply_Delta(const Polynomial& p);

// H = -g - 1 + x_1 d_1 + sum_{n>=2} (n+1) x_n d_n. Monomials are
// eigenvectors: x_1^a x_{n_1}..x_{n_k} has eigenvalue -g + a - 1 + k + sum n_i.
Polynomial apply_H(const Polynomial& p, int g);
long h_big_eigenvalue(const Monomial& m, int g);

// Divided power Delta^[m] = Delta^m / m!, computed by the closed
// set-partition formula: on x_1^[a] x_{n_1}..x_{n_k} it sums over
// partitions of {1..k} into k-m blocks, weighting each by prod b(I) and
// replacing the blocks by x_{d(I)}.
Polynomial delta_divided(int m, const Polynomial& p);

// D_k = (1/k!) sum_{n_1..n_k>=1} (sum n)!/(prod n_i!) x_{sum n - 1} d_{n_1}..d_{n_k}.
Polynomial apply_Dk(int k, const Polynomial& p);

// Delta_{k,m} = (1/k!) sum_{n_1..n_k>=2} (sum n + m)!/(prod n_i! m!)
//               x_{sum n + m - 1} d_{n_1}..d_{n_k}.
// Delta_{0,m} is multiplication by x_{m-1}; Delta_{2,0} = Delta.
Polynomial apply_Delta_km(int k, int m, const Polynomial& p);

// sl2 triple: e = multiplication by x_1 (truncates at the cap), f = -D,
// h = -g + sum_{n>=1} (n+1) x_n d_n.
Polynomial sl2_e(const Polynomial& p);
Polynomial sl2_f(const Polynomial& p, int g);
Polynomial sl2_h(const Polynomial& p, int g);
long h_sl2_eigenvalue(const Monomial& m, int g);

// Inversion pullback: x_m^{e_m} picks up (-1)^{(m+1) e_m}, so x_1 is fixed.
Polynomial apply_inversion(const Polynomial& p);

// Multiplication pullback/pushforward gradings: a monomial of codimension d
// and weight s scales by n^{2d-s} under [n]^* and by n^{2g-2d+s} under [n]_*.
Polynomial scaling_pullback(int n, const Polynomial& p, int g);
Polynomial scaling_pushforward(int n, const Polynomial& p, int g);

// binom(H - i, j) acting eigenvalue-wise: each monomial is scaled by
// binom(lambda - i, j) for its H-eigenvalue lambda. Monomials diagonalize H,
// which is the only reading that makes the operator binomial well defined.
Polynomial operator_binomial_H(int i, int j, const Polynomial& p, int g);

// D^[d] = D^d / d!.
Polynomial d_divided(int d, const Polynomial& p, int g);

// Named operator with its degree shift, for generic linearity/grading tests.
struct LinearOperator {
    std::string name;
    int degree_shift;
    std::function<Polynomial(const Polynomial&)> apply;
};

LinearOperator make_op_D(int g);
LinearOperator make_op_Delta();
LinearOperator make_op_H(int g);
LinearOperator make_op_Dk(int k);
LinearOperator make_op_Delta_km(int k, int m);
LinearOperator make_op_e();
LinearOperator make_op_f(int g);
LinearOperator make_op_h(int g);

}  // namespace taut
