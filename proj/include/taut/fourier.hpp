#pragma once

#include "taut/polynomial.hpp"
#include "taut/tautring.hpp"

#include <vector>

namespace taut {

// Fourier transform on the monomial basis:
//   S(x_1^[a] x_{n_1}..x_{n_k}) = (-1)^a sum_{m>=0}
//       x_1^[m - a + g - k - sum n_i] Delta^[m](x_{n_1}..x_{n_k}),
// with x_1^[t] = 0 for t < 0, extended linearly. Free-ring form; never
// consults the quotient.
Polynomial fourier_S_free(const Polynomial& p, int g);

// S in the given context; quotient mode reports the normal form.
Polynomial fourier_S(const Polynomial& p, const GenusContext& ctx);

// S^{-1} = (-1)^g [-1]^* S. In the free ring S^2 is involutive only on the
// subspace V', so free-mode input outside V' is rejected; in the quotient the
// inverse is global.
Polynomial fourier_S_inv(const Polynomial& p, const GenusContext& ctx);

// U = S(p_1 . S^{-1}(-)), which acts on polynomials exactly as D.
Polynomial apply_U(const Polynomial& p, const GenusContext& ctx);

// U^[n] = sum_{i=0}^{n} d_1^{n-i} Delta^[i] binom(H - i, n - i).
Polynomial U_divided(int n, const Polynomial& p, int g);

// exp(p_1) * p via the closed two-index sum; agrees with
// (-1)^g sum_{l=0}^{g} (-1)^l U^[l](p).
Polynomial exp_pontryagin(const Polynomial& p, const GenusContext& ctx);

// Pontryagin product a * b = S^{-1}(S(a) . S(b)); quotient mode only, since
// the definition uses the involutivity of S mod I_g.
Polynomial pontryagin_mul(const Polynomial& a, const Polynomial& b, const GenusContext& ctx);

// S(p_{n_1}..p_{n_k}) for n_i > 1 via the x_1-free special case
//   sum_{j>=0} p_1^[j + g - k - sum n_i] Delta^[j](p_{n_1}..p_{n_k}).
Polynomial nop1_fourier(const std::vector<int>& ns, int g, int cap);

// Finite sum exp(sign * x_1) truncated at the cap.
Polynomial exp_p1(int sign, int cap);

}  // namespace taut
