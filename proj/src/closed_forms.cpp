#include "patternlab/closed_forms.hpp"

#include <stdexcept>

#include "patternlab/cheby.hpp"

namespace patternlab {

RatFunc decreasing_closed(int m) {
    if (m < 1) throw std::invalid_argument("decreasing_closed: m < 1");
    if (m % 2 == 0) {
        const int k = m / 2;
        return RatFunc(p_cheb(k - 1), p_cheb(k));
    }
    const int k = (m + 1) / 2;
    return RatFunc(q_cheb(k - 1), q_cheb(k));
}

Permutation family_pattern(Family family, int k) {
    if (k < 3) throw std::invalid_argument("family_pattern: k < 3");
    std::vector<int> v;
    switch (family) {
        case Family::K312:
            for (int i = k; i >= 3; --i) v.push_back(i);
            v.insert(v.end(), {1, 2});
            break;
        case Family::K4231:
            for (int i = k + 1; i >= 4; --i) v.push_back(i);
            v.insert(v.end(), {2, 3, 1});
            break;
        case Family::K4132:
            for (int i = k; i >= 4; --i) v.push_back(i);
            v.insert(v.end(), {1, 3, 2});
            break;
        case Family::K4213:
            for (int i = k; i >= 4; --i) v.push_back(i);
            v.insert(v.end(), {2, 1, 3});
            break;
        case Family::K4123:
            for (int i = k; i >= 4; --i) v.push_back(i);
            v.insert(v.end(), {1, 2, 3});
            break;
    }
    return Permutation(std::move(v));
}

RatFunc family_closed(Family family, int k) {
    if (k < 3) throw std::invalid_argument("family_closed: k < 3");
    switch (family) {
        case Family::K312:
        case Family::K4231:
            return RatFunc(p_cheb(k - 2), p_cheb(k - 1));
        case Family::K4132:
        case Family::K4213:
            return RatFunc(q_cheb(k - 2), q_cheb(k - 1));
        case Family::K4123: {
            const IntPoly a(std::vector<Int>{1, -1, 0, 1});   // 1 - x + x^3
            const IntPoly b(std::vector<Int>{0, 0, -1, 1});   // (x - 1) x^2
            return RatFunc(a * p_cheb(k - 3) + b * p_cheb(k - 4),
                           a * p_cheb(k - 2) + b * p_cheb(k - 3));
        }
    }
    throw std::logic_error("family_closed: unreachable");
}

RatFunc layered_closed(const std::vector<int>& layers) {
    for (int l : layers)
        if (l < 1) throw std::invalid_argument("layered_closed: nonpositive part");
    if (layers.size() == 2) return decreasing_closed(layers[0] + layers[1]);
    if (layers.size() == 3) {
        for (int l : layers)
            if (l % 2 != 0)
                throw std::invalid_argument(
                    "layered_closed: three-layer closed form needs all parts even");
        const int k1 = layers[0] / 2, k2 = layers[1] / 2, k3 = layers[2] / 2;
        const int K = k1 + k2 + k3;
        IntPoly num = p_cheb(K) * p_cheb(K - 1) +
                      IntPoly::monomial(2) * p_cheb(k1 + k2 - 1) *
                          p_cheb(k1 + k3 - 1) * p_cheb(k2 + k3 - 1);
        IntPoly den = p_cheb(k1 + k2) * p_cheb(k1 + k3) * p_cheb(k2 + k3);
        return RatFunc(std::move(num), std::move(den));
    }
    throw std::invalid_argument("layered_closed: supported for 2 or 3 layers only");
}

RatFunc kT1_closed(const RatFunc& f) {
    const RatFunc x(IntPoly::x());
    return RatFunc(1) / (RatFunc(1) - x - x * x * f);
}

RatFunc kiT1i_closed(const IntPoly& f0, const IntPoly& f1, int i) {
    if (i < 1) throw std::invalid_argument("kiT1i_closed: i < 1");
    const IntPoly x2 = IntPoly::monomial(2);
    return RatFunc(f1 * p_cheb(i - 1) - x2 * f0 * p_cheb(i - 2),
                   f1 * p_cheb(i) - x2 * f0 * p_cheb(i - 1));
}

}  // namespace patternlab
