#pragma once

#include <functional>
#include <vector>

#include "patternlab/intpoly.hpp"
#include "patternlab/oracle.hpp"

namespace patternlab {

// Continued-fraction evaluation for the multivariate count
//   sum over pi in I(3412) of prod_k x_k^{tau_k(pi)}
// specialized to two variables: x_1 = x q^{lambda_1}, x_i = q^{lambda_i} for
// i >= 2, with an optional cutoff m forcing x_i = 0 for i >= m.

// One specialized CF term x^{x_exp} q^{q_exp}, or the zero monomial.
struct CFMonomial {
    bool zero = false;
    int x_exp = 0;
    long long q_exp = 0;
};

class CFSpec {
public:
    // Level-n numerator monomial, n >= 1: x^2 q^{sum of (C(2n-2,i-1)+C(2n-1,i-1)) lambda_i}.
    CFMonomial numerator(int n) const;
    // Level-n denominator is 1 - this monomial, n >= 0:
    //   x q^{sum of C(2n,i-1) lambda_i}   (level 0: x q^{lambda_1}).
    CFMonomial denominator_monomial(int n) const;

    // Finite CF counting involutions avoiding the decreasing pattern of
    // length m (cutoff x_i = 0 for i >= m); univariate in x.
    static CFSpec avoid_decreasing(int m);

    // Statistic weights: inv -> lambda = (0,1,0,...); m -> all ones;
    // lrmax/rlmin -> (-1)^{i-1}; fix -> (-2)^{i-1}.
    static CFSpec statistic(Statistic stat);

private:
    std::function<long long(int)> lambda_;  // weight of x_i, i >= 1
    int cutoff_ = 0;                        // 0 = none, else x_i = 0 for i >= cutoff_
};

// Truncated bivariate series: coeffs[n] is the q-polynomial at x^n.
struct QSeries {
    int order = 0;
    std::vector<IntPoly> coeffs;

    const IntPoly& coeff(int n) const { return coeffs[static_cast<size_t>(n)]; }
    // Collapses at q = 1; useful for univariate specializations.
    std::vector<Int> at_q1() const;
};

// Bottom-up evaluation exact in Z[q][[x]], correct to order N.  The depth
// must be at least ceil(N/2) + 1; the default (-1) uses ceil(N/2) + 2.
QSeries cf_series(const CFSpec& spec, int order, int depth = -1);

// Verifies that the multiset of exponent vectors (tau_1, ..., tau_{2n}) over
// I_n(3412) matches the one computed over Motzkin paths of length n.
bool multivariate_tau_check(int n);

}  // namespace patternlab
