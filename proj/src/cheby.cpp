#include "patternlab/cheby.hpp"

#include <stdexcept>
#include <vector>

namespace patternlab {

IntPoly p_cheb(int k) {
    if (k < -1) throw std::invalid_argument("p_cheb: k < -1");
    if (k == -1) return {};
    static std::vector<IntPoly> cache{IntPoly(1)};
    static const IntPoly one_minus_x(std::vector<Int>{1, -1});
    static const IntPoly x_sq = IntPoly::monomial(2);
    for (int m = static_cast<int>(cache.size()); m <= k; ++m) {
        IntPoly prev2 = m >= 2 ? cache[static_cast<size_t>(m - 2)] : IntPoly{};
        cache.push_back(one_minus_x * cache[static_cast<size_t>(m - 1)] - x_sq * prev2);
    }
    return cache[static_cast<size_t>(k)];
}

IntPoly q_cheb(int k) {
    if (k < 0) throw std::invalid_argument("q_cheb: k < 0");
    return p_cheb(k) + p_cheb(k - 1).shifted(1);
}

bool cheby_sum_identity_check(int k, int l, int w) {
    if (k < -1 || l < -1 || w < 0)
        throw std::invalid_argument("cheby_sum_identity_check: bad indices");
    IntPoly lhs = p_cheb(k + w) * p_cheb(l + w) -
                  (p_cheb(k) * p_cheb(l)).shifted(2 * w);
    IntPoly rhs = p_cheb(w - 1) * p_cheb(k + l + w + 1);
    return lhs == rhs;
}

}  // namespace patternlab
