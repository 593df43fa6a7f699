#pragma once

#include "patternlab/intpoly.hpp"

namespace patternlab {

// The Chebyshev-derived polynomial family p_k = x^k U_k((1-x)/(2x)), carried
// entirely inside integer-polynomial arithmetic via
//   p_{-1} = 0,  p_0 = 1,  p_k = (1-x) p_{k-1} - x^2 p_{k-2}.
IntPoly p_cheb(int k);

// q_k = p_k + x p_{k-1} = x^k (U_k + U_{k-1}).
IntPoly q_cheb(int k);

// Verifies U_{k+w} U_{l+w} - U_k U_l = U_{w-1} U_{k+l+w+1} in the p-family,
// where clearing the uniform power x^{k+l+2w} turns the identity into
//   p_{k+w} p_{l+w} - x^{2w} p_k p_l = p_{w-1} p_{k+l+w+1}.
bool cheby_sum_identity_check(int k, int l, int w);

}  // namespace patternlab
