#include "patternlab/ratfunc.hpp"

#include <stdexcept>

namespace patternlab {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    const Int c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (c > 1) {
        num_ = num_.divide_exact(IntPoly(c));
        den_ = den_.divide_exact(IntPoly(c));
    }
    int low = 0;
    while (den_.coeff(low) == 0) ++low;
    if (den_.coeff(low) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e == 0) return RatFunc(1);
    if (e < 0) {
        if (is_zero()) throw std::domain_error("RatFunc: negative power of zero");
        return RatFunc(den_, num_).pow(-e);
    }
    return RatFunc(num_.pow(e), den_.pow(e));
}

std::string RatFunc::str() const {
    if (den_ == IntPoly(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace patternlab
