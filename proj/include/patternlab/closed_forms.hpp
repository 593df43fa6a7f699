#pragma once

#include <vector>

#include "patternlab/permutation.hpp"
#include "patternlab/ratfunc.hpp"

namespace patternlab {

// Rational closed forms for the pattern families with known Chebyshev-type
// generating functions.  Everything is expressed through the p-family of
// cheby.hpp, so all arithmetic stays in Z[x].

// F for avoiding the decreasing pattern m m-1 ... 2 1 (m >= 1):
//   m = 2k   -> p_{k-1} / p_k
//   m = 2k-1 -> q_{k-1} / q_k
RatFunc decreasing_closed(int m);

// One-parameter families indexed by k >= 3.  The tail names the last values
// of the pattern; everything before it is the decreasing run down to that
// tail, e.g. K4132 at k = 5 is 5 4 1 3 2.
enum class Family { K312, K4231, K4132, K4213, K4123 };

Permutation family_pattern(Family family, int k);
RatFunc family_closed(Family family, int k);

// F for avoiding a single layered pattern [l_1,...,l_m].  Supported: m = 2
// (any parts) and m = 3 with all parts even; anything else throws
// std::invalid_argument and the caller should fall back to the series engine.
RatFunc layered_closed(const std::vector<int>& layers);

// One application of the k T 1 wrap: F -> 1 / (1 - x - x^2 F).
RatFunc kT1_closed(const RatFunc& f);

// i-fold application for F = f0/f1:
//   (f1 p_{i-1} - x^2 f0 p_{i-2}) / (f1 p_i - x^2 f0 p_{i-1}),  i >= 1.
RatFunc kiT1i_closed(const IntPoly& f0, const IntPoly& f1, int i);

}  // namespace patternlab
