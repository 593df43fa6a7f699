#include "patternlab/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace patternlab {

PowerSeries::PowerSeries(int order, std::vector<Rat> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    c_.resize(static_cast<size_t>(order) + 1, Rat(0));
}

PowerSeries PowerSeries::zero(int order) {
    return PowerSeries(order, std::vector<Rat>(static_cast<size_t>(order) + 1, Rat(0)));
}

const Rat& PowerSeries::coeff(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("PowerSeries: coefficient index");
    return c_[static_cast<size_t>(n)];
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("PowerSeries: cannot extend order");
    return PowerSeries(order,
                       std::vector<Rat>(c_.begin(), c_.begin() + order + 1));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order_, b.order_);
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
    return PowerSeries(n, std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order_, b.order_);
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] - b.c_[static_cast<size_t>(i)];
    return PowerSeries(n, std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order_, b.order_);
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<size_t>(i + j)] +=
                a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    return PowerSeries(n, std::move(c));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order_, b.order_);
    if (b.c_[0] == 0) throw std::domain_error("PowerSeries: divisor has zero constant term");
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        Rat acc = a.c_[static_cast<size_t>(i)];
        for (int j = 0; j < i; ++j)
            acc -= c[static_cast<size_t>(j)] * b.c_[static_cast<size_t>(i - j)];
        c[static_cast<size_t>(i)] = acc / b.c_[0];
    }
    return PowerSeries(n, std::move(c));
}

PowerSeries series_of(const RatFunc& f, int order) {
    if (f.den().coeff(0) == 0)
        throw std::domain_error("series_of: denominator vanishes at 0");
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    const Rat d0(f.den().coeff(0));
    for (int i = 0; i <= order; ++i) {
        Rat acc(f.num().coeff(i));
        for (int j = 0; j < i; ++j)
            acc -= c[static_cast<size_t>(j)] * Rat(f.den().coeff(i - j));
        c[static_cast<size_t>(i)] = acc / d0;
    }
    return PowerSeries(order, std::move(c));
}

}  // namespace patternlab
