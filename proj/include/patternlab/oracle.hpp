#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "patternlab/intpoly.hpp"
#include "patternlab/pattern_set.hpp"
#include "patternlab/permutation.hpp"
#include "patternlab/trimatrix.hpp"

namespace patternlab {

inline constexpr int kDefaultInvolutionLimit = 14;

// Brute-force ground truth over I_n(3412), built through the recursive
// structure 1 pi^{+1} / pi_1 * pi_2 rather than by filtering S_n.

// Yields each element of I_n(3412) exactly once.
void for_each_involution(int n, const std::function<void(const Permutation&)>& fn,
                         int limit = kDefaultInvolutionLimit);

// Cached list form, memoized internally for reuse.
const std::vector<Permutation>& involutions_3412(int n,
                                                 int limit = kDefaultInvolutionLimit);

// |I_n(3412, T)|.
std::uint64_t count_avoiders(const PatternSet& T, int n,
                             int limit = kDefaultInvolutionLimit);

// Number of pi in I_n(3412) with exactly r occurrences of pattern.
std::uint64_t count_with_occurrences(const Permutation& pattern, std::uint64_t r,
                                     int n, int limit = kDefaultInvolutionLimit);

enum class Statistic { Inv, LrMax, RlMin, Fix, M };

// Sum over I_n(3412) of q^{stat(pi)}, as a polynomial in q.
IntPoly statistic_distribution(Statistic stat, int n,
                               int limit = kDefaultInvolutionLimit);

// Exact count of bounded lattice paths by dynamic programming over height.
Int brute_bounded_paths(PathFamily family, int r, int s, int k, int len);

}  // namespace patternlab
