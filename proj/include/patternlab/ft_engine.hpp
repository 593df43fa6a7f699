#pragma once

#include <map>
#include <string>
#include <vector>

#include "patternlab/numeric.hpp"
#include "patternlab/pattern_set.hpp"
#include "patternlab/power_series.hpp"

namespace patternlab {

inline constexpr int kDefaultOrderLimit = 200;

// Memoized series engine for F_T(x) = sum_n |I_n(3412, T)| x^n.
//
// Coefficients are filled in increasing order n: the x F_{beta(T)} term
// consumes coefficients <= n-1 and the x^2 convolution term consumes
// coefficients <= n-2, so self-referential sets are well-founded.  The memo
// table is the only mutable state; confine one engine to one worker.
class FtEngine {
public:
    FtEngine() = default;

    // Coefficient n of F_T.
    Int coefficient(const PatternSet& T, int n);

    // Truncated expansion to the given order.
    PowerSeries series(const PatternSet& T, int order, int limit = kDefaultOrderLimit);

    // Shared engine for callers that want a process-wide memo.
    static FtEngine& global();

private:
    struct LeftTerm {
        int sign;
        std::string key;
    };
    struct Tuple {
        std::vector<LeftTerm> left;  // signed F_{T_Y} keys for one index tuple
        std::string right_key;
    };
    struct Plan {
        std::string beta_key;
        std::vector<Tuple> tuples;
    };

    enum class Kind { Zero, One, Motzkin, Recursive };

    std::string register_set(const PatternSet& canonical);
    Kind kind_of(const PatternSet& canonical) const;
    const Plan& plan_for(const std::string& key);
    void ensure_coefficients(const std::string& key, int n);

    // std::map keeps references stable across the recursive inserts below.
    std::map<std::string, PatternSet> sets_;
    std::map<std::string, Plan> plans_;
    std::map<std::string, std::vector<Int>> coeffs_;
};

}  // namespace patternlab
