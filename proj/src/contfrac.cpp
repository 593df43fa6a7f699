#include "patternlab/contfrac.hpp"

#include <algorithm>
#include <stdexcept>

#include "patternlab/motzkin.hpp"

namespace patternlab {

namespace {

long long clamped(const Int& v) {
    if (v < 0) throw std::domain_error("CFSpec: negative q exponent after specialization");
    if (v > Int(1000000)) throw std::length_error("CFSpec: q exponent too large");
    return static_cast<long long>(v);
}

using Bivar = std::vector<IntPoly>;  // index = power of x, entry = q-polynomial

Bivar zero_bivar(int order) { return Bivar(static_cast<size_t>(order) + 1); }

Bivar unit_bivar(int order) {
    Bivar b = zero_bivar(order);
    b[0] = IntPoly(1);
    return b;
}

Bivar monomial_bivar(const CFMonomial& m, int order) {
    Bivar b = zero_bivar(order);
    if (!m.zero && m.x_exp <= order)
        b[static_cast<size_t>(m.x_exp)] = IntPoly::monomial(static_cast<int>(m.q_exp));
    return b;
}

Bivar& sub_assign(Bivar& a, const Bivar& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Bivar mul(const Bivar& a, const Bivar& b) {
    Bivar out = zero_bivar(static_cast<int>(a.size()) - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < out.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

Bivar inverse(const Bivar& a) {
    if (a[0] != IntPoly(1))
        throw std::domain_error("cf_series: denominator constant term is not 1");
    Bivar out = zero_bivar(static_cast<int>(a.size()) - 1);
    out[0] = IntPoly(1);
    for (size_t n = 1; n < out.size(); ++n) {
        IntPoly acc;
        for (size_t j = 1; j <= n; ++j)
            if (!a[j].is_zero()) acc += a[j] * out[n - j];
        out[n] = -acc;
    }
    return out;
}

}  // namespace

CFMonomial CFSpec::numerator(int n) const {
    if (n < 1) throw std::invalid_argument("CFSpec::numerator: n < 1");
    if (cutoff_ > 0 && cutoff_ <= 2 * n) return {true, 0, 0};
    Int e = 0;
    for (int i = 1; i <= 2 * n; ++i) {
        if (cutoff_ > 0 && i >= cutoff_) break;
        e += (binomial(2 * n - 2, i - 1) + binomial(2 * n - 1, i - 1)) * Int(lambda_(i));
    }
    return {false, 2, clamped(e)};
}

CFMonomial CFSpec::denominator_monomial(int n) const {
    if (n < 0) throw std::invalid_argument("CFSpec::denominator_monomial: n < 0");
    if (cutoff_ > 0 && cutoff_ <= 2 * n + 1) return {true, 0, 0};
    Int e = 0;
    for (int i = 1; i <= 2 * n + 1; ++i) {
        if (cutoff_ > 0 && i >= cutoff_) break;
        e += binomial(2 * n, i - 1) * Int(lambda_(i));
    }
    return {false, 1, clamped(e)};
}

CFSpec CFSpec::avoid_decreasing(int m) {
    if (m < 1) throw std::invalid_argument("CFSpec::avoid_decreasing: m < 1");
    CFSpec spec;
    spec.lambda_ = [](int) { return 0LL; };
    spec.cutoff_ = m;
    return spec;
}

CFSpec CFSpec::statistic(Statistic stat) {
    CFSpec spec;
    switch (stat) {
        case Statistic::Inv:
            spec.lambda_ = [](int i) { return i == 2 ? 1LL : 0LL; };
            break;
        case Statistic::M:
            spec.lambda_ = [](int) { return 1LL; };
            break;
        case Statistic::LrMax:
        case Statistic::RlMin:
            spec.lambda_ = [](int i) { return i % 2 == 1 ? 1LL : -1LL; };
            break;
        case Statistic::Fix:
            spec.lambda_ = [](int i) {
                long long v = 1;
                for (int j = 1; j < i; ++j) v *= -2;
                return v;
            };
            break;
    }
    return spec;
}

std::vector<Int> QSeries::at_q1() const {
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const auto& p : coeffs) {
        Int s = 0;
        for (const auto& c : p.coeffs()) s += c;
        out.push_back(s);
    }
    return out;
}

QSeries cf_series(const CFSpec& spec, int order, int depth) {
    if (order < 0) throw std::invalid_argument("cf_series: negative order");
    const int min_depth = (order + 1) / 2 + 1;
    if (depth < 0) depth = min_depth + 1;
    if (depth < min_depth)
        throw std::invalid_argument("cf_series: depth insufficient for requested order");

    Bivar tail = zero_bivar(order);
    for (int n = depth; n >= 1; --n) {
        Bivar den = unit_bivar(order);
        sub_assign(den, monomial_bivar(spec.denominator_monomial(n), order));
        sub_assign(den, tail);
        tail = mul(monomial_bivar(spec.numerator(n), order), inverse(den));
    }
    Bivar den = unit_bivar(order);
    sub_assign(den, monomial_bivar(spec.denominator_monomial(0), order));
    sub_assign(den, tail);
    return QSeries{order, inverse(den)};
}

bool multivariate_tau_check(int n) {
    if (n < 0 || n > 6)
        throw std::invalid_argument("multivariate_tau_check: n out of range");
    std::vector<std::vector<std::uint64_t>> from_perms, from_paths;
    for (const auto& p : involutions_3412(n)) {
        std::vector<std::uint64_t> v;
        for (int k = 1; k <= 2 * n; ++k) v.push_back(tau_k(p, k));
        from_perms.push_back(std::move(v));
    }
    for_each_motzkin_path(n, [&](const MotzkinPath& path) {
        std::vector<std::uint64_t> v;
        for (int k = 1; k <= 2 * n; ++k) v.push_back(tau_k_path(path, k));
        from_paths.push_back(std::move(v));
    });
    std::sort(from_perms.begin(), from_perms.end());
    std::sort(from_paths.begin(), from_paths.end());
    return from_perms == from_paths;
}

}  // namespace patternlab
