#pragma once

#include "patternlab/intpoly.hpp"

namespace patternlab {

// Reduced ratio of two integer polynomials.  The stored pair has constant
// gcd and the lowest-order nonzero denominator coefficient positive.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(IntPoly num, IntPoly den);
    RatFunc(const IntPoly& p) : num_(p), den_(1) {}  // NOLINT
    RatFunc(int constant) : num_(constant), den_(1) {}  // NOLINT

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    // Integer power; negative exponents invert (the function must be nonzero).
    RatFunc pow(int e) const;

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string str() const;

private:
    void normalize();
    IntPoly num_, den_;
};

}  // namespace patternlab
