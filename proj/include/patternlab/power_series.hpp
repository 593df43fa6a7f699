#pragma once

#include <vector>

#include "patternlab/numeric.hpp"
#include "patternlab/ratfunc.hpp"

namespace patternlab {

// Truncated formal power series with exact rational coefficients for
// x^0 .. x^order.  Arithmetic never claims coefficients beyond the minimum
// of the operand orders.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int order, std::vector<Rat> coeffs);
    static PowerSeries zero(int order);

    int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(int n) const;

    PowerSeries truncated(int order) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    // Division requires b(0) != 0.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

    // Equal order and identical coefficients.
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    int order_ = -1;
    std::vector<Rat> c_;
};

// Expansion of f to order N; throws std::domain_error if f.den()(0) == 0.
PowerSeries series_of(const RatFunc& f, int order);

}  // namespace patternlab
