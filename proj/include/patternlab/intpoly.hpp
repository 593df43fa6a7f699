#pragma once

#include <string>
#include <vector>

#include "patternlab/numeric.hpp"

namespace patternlab {

// Dense polynomial with arbitrary-precision integer coefficients, index =
// degree.  Canonical form has no trailing zero coefficient; the zero
// polynomial is the empty sequence.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(int constant);  // NOLINT: implicit by design
    IntPoly(const Int& constant);
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly x();
    static IntPoly monomial(int degree, Int coeff = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)]
                                                           : Int(0);
    }
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly scaled(const Int& k) const;
    IntPoly shifted(int k) const;  // multiply by x^k
    IntPoly pow(int e) const;

    // Content (gcd of coefficients, nonnegative; 0 for the zero polynomial).
    Int content() const;
    IntPoly primitive_part() const;

    // Exact division; throws std::domain_error if the division is not exact.
    IntPoly divide_exact(const IntPoly& d) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    // "1 - 2*x + x^3" style.
    std::string str() const;

private:
    void trim();
    std::vector<Int> c_;
};

// Polynomial gcd over the integers (primitive PRS), normalized with positive
// leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(IntPoly a, IntPoly b);

}  // namespace patternlab
