#pragma once

#include "taut/polynomial.hpp"

namespace taut {

// Basis conversions between the generator classes p_k and the classes w_d,
// where p_k is minus the k-th Newton polynomial of the roots of
// t^g - w_1 t^{g-1} + ... + (-1)^g w_g. Both directions are identities of
// symmetric functions: they depend on g only through the number of
// w-variables, never on the relation ideal.

// Input indexed by w-variables, output by p-variables (w_k substituted by
// its expression in the p's).
Polynomial newton_w_to_p(const Polynomial& wpoly, int g);

// Inverse direction: p_k substituted by its expression in the w's
// (p_1 = -w_1, p_2 = w_2 - w_1^2/2, ...). Defined for every k, with w_j = 0
// for j > g.
Polynomial newton_p_to_w(const Polynomial& ppoly, int g);

}  // namespace taut
