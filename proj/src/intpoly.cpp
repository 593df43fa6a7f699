#include "patternlab/intpoly.hpp"

#include <stdexcept>

namespace patternlab {

IntPoly::IntPoly(int constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(const Int& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::x() { return monomial(1); }

IntPoly IntPoly::monomial(int degree, Int coeff) {
    if (coeff == 0) return {};
    std::vector<Int> c(static_cast<size_t>(degree) + 1, Int(0));
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Int& k) const {
    if (k == 0) return {};
    IntPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Int> c(static_cast<size_t>(k), Int(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("IntPoly::pow: negative exponent");
    IntPoly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return g < 0 ? Int(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
    Int c = content();
    if (c == 0) return {};
    IntPoly r = *this;
    for (auto& v : r.c_) v /= c;
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("IntPoly: division by zero");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw std::domain_error("IntPoly: inexact division");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(static_cast<size_t>(degree() - d.degree()) + 1, Int(0));
    const Int& lead = d.c_.back();
    for (int i = degree() - d.degree(); i >= 0; --i) {
        Int top = rem[static_cast<size_t>(i + d.degree())];
        if (top % lead != 0) throw std::domain_error("IntPoly: inexact division");
        Int q = top / lead;
        quot[static_cast<size_t>(i)] = q;
        if (q != 0)
            for (int j = 0; j <= d.degree(); ++j)
                rem[static_cast<size_t>(i + j)] -= q * d.c_[static_cast<size_t>(j)];
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("IntPoly: inexact division");
    return IntPoly(std::move(quot));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        const Int& a = c_[static_cast<size_t>(i)];
        if (a == 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) out += mag.str() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const Int lead = b.coeff(b.degree());
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        IntPoly t = b.shifted(shift).scaled(a.coeff(a.degree()));
        a = a.scaled(lead) - t;
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.coeff(b.degree()) < 0 ? -b : b;
    if (b.is_zero()) return a.coeff(a.degree()) < 0 ? -a : a;
    const Int cont = boost::multiprecision::gcd(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    IntPoly g = a.scaled(cont);
    return g.coeff(g.degree()) < 0 ? -g : g;
}

}  // namespace patternlab
