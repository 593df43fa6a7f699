#include "patternlab/occurrence_gf.hpp"

#include <stdexcept>
#include <vector>

#include "patternlab/cheby.hpp"
#include "patternlab/numeric.hpp"

namespace patternlab {

namespace {

long long even_weight_d(int k, int i) {
    // Using Int-free arithmetic would overflow for large i; weights are only
    // compared against r, so anything past 2^63 can be clamped.
    Int w = binomial(2 * k + 2 * i - 2, 2 * k - 1) + binomial(2 * k + 2 * i - 1, 2 * k - 1);
    return w > Int(INT64_MAX) ? INT64_MAX : static_cast<long long>(w);
}

long long even_weight_l(int k, int i) {
    Int w = binomial(2 * k + 2 * i, 2 * k - 1);
    return w > Int(INT64_MAX) ? INT64_MAX : static_cast<long long>(w);
}

long long odd_weight_d(int k, int i) {
    Int w = binomial(2 * k + 2 * i + 1, 2 * k) + binomial(2 * k + 2 * i, 2 * k);
    return w > Int(INT64_MAX) ? INT64_MAX : static_cast<long long>(w);
}

long long odd_weight_l(int k, int i) {
    Int w = binomial(2 * k + 2 * i, 2 * k);
    return w > Int(INT64_MAX) ? INT64_MAX : static_cast<long long>(w);
}

RatFunc even_term(int k, const std::vector<long long>& d, const std::vector<long long>& l) {
    const int b = static_cast<int>(d.size()) - 1;
    Int coeff = 1;
    for (int i = 0; i <= b; ++i) {
        const long long d_next = i < b ? d[static_cast<size_t>(i) + 1] : 0;
        coeff *= binomial(d[static_cast<size_t>(i)] + d_next + l[static_cast<size_t>(i)] - 1,
                          d_next + l[static_cast<size_t>(i)]);
        coeff *= binomial(d_next + l[static_cast<size_t>(i)], l[static_cast<size_t>(i)]);
        if (coeff == 0) return {};
    }
    long long xexp = 2 * k - 2;
    for (int i = 0; i <= b; ++i)
        xexp += 2 * d[static_cast<size_t>(i)] + l[static_cast<size_t>(i)];
    RatFunc term(IntPoly::monomial(static_cast<int>(xexp), coeff));
    term *= RatFunc(p_cheb(k - 1)).pow(static_cast<int>(d[0]) - 1);
    term *= RatFunc(p_cheb(k)).pow(-(static_cast<int>(d[0]) + 1));
    return term;
}

RatFunc odd_term(int k, const std::vector<long long>& d, const std::vector<long long>& l) {
    const int b = static_cast<int>(d.size()) - 1;
    Int coeff = 1;
    for (int i = 0; i <= b; ++i) {
        const long long d_prev = i > 0 ? d[static_cast<size_t>(i) - 1] : 1;
        coeff *= binomial(d[static_cast<size_t>(i)] + d_prev + l[static_cast<size_t>(i)] - 1,
                          d[static_cast<size_t>(i)] + l[static_cast<size_t>(i)]);
        coeff *= binomial(d[static_cast<size_t>(i)] + l[static_cast<size_t>(i)],
                          l[static_cast<size_t>(i)]);
        if (coeff == 0) return {};
    }
    long long xexp = 2 * k;
    for (int i = 0; i <= b; ++i)
        xexp += 2 * d[static_cast<size_t>(i)] + l[static_cast<size_t>(i)];
    const int s = static_cast<int>(d[0] + l[0]);
    RatFunc term(IntPoly::monomial(static_cast<int>(xexp), coeff));
    term *= RatFunc(p_cheb(k)).pow(s - 1);
    term *= RatFunc(q_cheb(k + 1)).pow(-(s + 1));
    return term;
}

// Enumerates nonnegative (d_0..d_b, l_0..l_b) with the weighted sum equal to
// r, backtracking from index b down to 0.
RatFunc sum_solutions(const OccurrenceSpec& spec) {
    const bool even = spec.parity == Parity::Even;
    const int k = spec.k;
    const int b = spec.b;
    std::vector<long long> d(static_cast<size_t>(b) + 1, 0);
    std::vector<long long> l(static_cast<size_t>(b) + 1, 0);
    RatFunc total;

    auto recurse = [&](auto&& self, int i, long long remaining) -> void {
        if (i < 0) {
            if (remaining == 0)
                total += even ? even_term(k, d, l) : odd_term(k, d, l);
            return;
        }
        const long long wd = even ? even_weight_d(k, i) : odd_weight_d(k, i);
        const long long wl = even ? even_weight_l(k, i) : odd_weight_l(k, i);
        for (long long dv = 0; dv * wd <= remaining; ++dv) {
            d[static_cast<size_t>(i)] = dv;
            const long long after_d = remaining - dv * wd;
            for (long long lv = 0; lv * wl <= after_d; ++lv) {
                l[static_cast<size_t>(i)] = lv;
                self(self, i - 1, after_d - lv * wl);
            }
        }
        d[static_cast<size_t>(i)] = 0;
        l[static_cast<size_t>(i)] = 0;
    };
    recurse(recurse, b, static_cast<long long>(spec.r));
    return total;
}

}  // namespace

OccurrenceSpec OccurrenceSpec::make(int pattern_len, std::uint64_t r) {
    if (pattern_len < 2) throw std::invalid_argument("OccurrenceSpec: pattern_len < 2");
    if (r < 1) throw std::invalid_argument("OccurrenceSpec: r < 1");
    OccurrenceSpec spec;
    spec.r = r;
    spec.parity = pattern_len % 2 == 0 ? Parity::Even : Parity::Odd;
    spec.k = pattern_len / 2;
    const Int ri(r);
    int b = 0;
    if (spec.parity == Parity::Even) {
        while (true) {
            Int lo = binomial(2 * spec.k + 2 * b, 2 * spec.k - 1) +
                     binomial(2 * spec.k + 2 * b + 1, 2 * spec.k - 1);
            Int hi = binomial(2 * spec.k + 2 * b + 2, 2 * spec.k - 1);
            if (ri < lo && ri < hi) break;
            ++b;
        }
    } else {
        while (!(binomial(2 * spec.k + 2 * b, 2 * spec.k) <= ri &&
                 ri < binomial(2 * spec.k + 2 * b + 2, 2 * spec.k)))
            ++b;
    }
    spec.b = b;
    return spec;
}

RatFunc occurrence_gf(const OccurrenceSpec& spec) {
    const int k = spec.k;
    if (spec.parity == Parity::Even) {
        if (spec.r == 1)
            return RatFunc(IntPoly::monomial(2 * k)) / RatFunc(p_cheb(k)).pow(2);
        if (spec.r == 2)
            return RatFunc(IntPoly::monomial(2 * k + 2)) * RatFunc(p_cheb(k - 1)) /
                   RatFunc(p_cheb(k)).pow(3);
    } else {
        if (spec.r == 1)
            return RatFunc(IntPoly::monomial(2 * k + 1)) / RatFunc(q_cheb(k + 1)).pow(2);
        if (spec.r == 2)
            return RatFunc(IntPoly::monomial(2 * k + 2)) * RatFunc(p_cheb(k)) /
                   RatFunc(q_cheb(k + 1)).pow(3);
    }
    return sum_solutions(spec);
}

}  // namespace patternlab
