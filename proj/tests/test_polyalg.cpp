#include <random>

#include "doctest.h"
#include "patternlab/cheby.hpp"
#include "patternlab/intpoly.hpp"
#include "patternlab/oracle.hpp"
#include "patternlab/power_series.hpp"
#include "patternlab/ratfunc.hpp"
#include "patternlab/trimatrix.hpp"

using namespace patternlab;

namespace {

IntPoly poly(std::vector<long long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}

std::vector<Int> int_coeffs(const PowerSeries& s) {
    std::vector<Int> out;
    for (const auto& r : s.coeffs()) {
        REQUIRE(boost::multiprecision::denominator(r) == 1);
        out.push_back(boost::multiprecision::numerator(r));
    }
    return out;
}

}  // namespace

TEST_CASE("integer polynomial basics") {
    CHECK(IntPoly().is_zero());
    CHECK(poly({1, 0, 0}) == IntPoly(1));  // trailing zeros trimmed
    CHECK(poly({1, -2}) * poly({1, 2}) == poly({1, 0, -4}));
    CHECK(poly({0, 0, 6, -3}).content() == 3);
    CHECK(poly({2, 4}).primitive_part() == poly({1, 2}));
    CHECK(poly({1, 0, -1}).divide_exact(poly({1, 1})) == poly({1, -1}));
    CHECK_THROWS_AS(poly({1, 1, 1}).divide_exact(poly({1, 1})), std::domain_error);
    CHECK(poly_gcd(poly({1, 0, -1}), poly({1, -2, 1})) == poly({-1, 1}));
    CHECK(poly({1, -2, 0, 1}).str() == "1 - 2*x + x^3");
    CHECK(IntPoly().str() == "0");
}

TEST_CASE("rational function normalization and arithmetic") {
    const RatFunc f(poly({0, 2}), poly({2, -2}));
    CHECK(f.num() == poly({0, 1}));
    CHECK(f.den() == poly({1, -1}));
    const RatFunc g(poly({1, 1}), poly({-1, 1}));
    CHECK(g.num() == poly({-1, -1}));  // sign moved so den starts positive
    CHECK(g.den() == poly({1, -1}));
    CHECK(f + (RatFunc(1) - f) == RatFunc(1));
    CHECK((f * g) / g == f);
    CHECK(f - f == RatFunc(0));
    CHECK(RatFunc(poly({1, 1}), poly({1, -1})).pow(-2) ==
          RatFunc(poly({1, -2, 1}), poly({1, 2, 1})));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Int> a(4), b(4);
        for (int i = 0; i < 4; ++i) {
            a[static_cast<size_t>(i)] = static_cast<int>(rng() % 11) - 5;
            b[static_cast<size_t>(i)] = static_cast<int>(rng() % 11) - 5;
        }
        const IntPoly pa{a}, pb{b};
        if (pa.is_zero() || pb.is_zero()) continue;
        const RatFunc r(pa, pb);
        CHECK(r * RatFunc(pb, pa) == RatFunc(1));
    }
}

TEST_CASE("series expansion") {
    CHECK(int_coeffs(series_of(RatFunc(poly({1}), poly({1, -1})), 4)) ==
          std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(int_coeffs(series_of(RatFunc(p_cheb(1), p_cheb(2)), 4)) ==
          std::vector<Int>{1, 1, 2, 4, 8});
    CHECK(int_coeffs(series_of(RatFunc(poly({1, -1, -1}), poly({1, -2, -1, 1})), 5)) ==
          std::vector<Int>{1, 1, 2, 4, 9, 20});
    CHECK_THROWS_AS(series_of(RatFunc(poly({1}), poly({0, 1})), 3), std::domain_error);
    const PowerSeries a = series_of(RatFunc(poly({1}), poly({1, -1})), 6);
    const PowerSeries b = series_of(RatFunc(poly({1, -1}), poly({1})), 3);
    CHECK((a * b).order() == 3);
    CHECK((a * b).coeff(3) == Rat(0));
    CHECK((a / a).coeff(2) == Rat(0));
    CHECK((a / a).coeff(0) == Rat(1));
}

TEST_CASE("Chebyshev family") {
    CHECK(p_cheb(-1).is_zero());
    CHECK(p_cheb(0) == IntPoly(1));
    CHECK(p_cheb(1) == poly({1, -1}));
    CHECK(p_cheb(2) == poly({1, -2}));
    CHECK(q_cheb(0) == IntPoly(1));
    CHECK(q_cheb(1) == IntPoly(1));
    CHECK(q_cheb(2) == poly({1, -1, -1}));
    for (int k = 0; k <= 40; ++k) {
        CHECK(p_cheb(k).coeff(0) == 1);
        // The top coefficient vanishes for k = 2, 5, 8, ... so the degree is
        // only bounded by k.
        CHECK(p_cheb(k).degree() <= k);
        CHECK(p_cheb(k + 1) == poly({1, -1}) * p_cheb(k) - poly({0, 0, 1}) * p_cheb(k - 1));
    }
}

TEST_CASE("Chebyshev product identity") {
    CHECK(cheby_sum_identity_check(0, 0, 1));
    CHECK(cheby_sum_identity_check(-1, 4, 3));
    CHECK(cheby_sum_identity_check(2, 3, 2));
    for (int k = -1; k <= 6; ++k)
        for (int l = -1; l <= 6; ++l)
            for (int w = 0; w <= 6; ++w) CHECK(cheby_sum_identity_check(k, l, w));
}

TEST_CASE("tridiagonal matrices and determinants") {
    CHECK(TriMatrix(TriKind::A, 0).entry(0, 0) == IntPoly::x());
    CHECK(TriMatrix(TriKind::B, 0).entry(0, 0).is_zero());
    CHECK(TriMatrix(TriKind::C, 1).entry(0, 0).is_zero());
    CHECK(TriMatrix(TriKind::A, 1).entry(0, 1) == IntPoly::x());
    CHECK(det_and_minor(TriMatrix(TriKind::A, 0), 0, 0).first == poly({1, -1}));
    for (int k = 0; k <= 10; ++k) {
        CHECK(det_and_minor(TriMatrix(TriKind::A, k), 0, 0).first == p_cheb(k + 1));
        CHECK(det_and_minor(TriMatrix(TriKind::B, k), 0, 0).first == q_cheb(k + 1));
        CHECK(det_and_minor(TriMatrix(TriKind::C, k), 0, 0).first == q_cheb(k + 1));
    }
}

TEST_CASE("bounded path generating functions match brute force") {
    CHECK(bounded_path_gf(PathFamily::M, 0, 0, 0) == RatFunc(poly({1}), poly({1, -1})));
    CHECK(int_coeffs(series_of(bounded_path_gf(PathFamily::M, 0, 0, 1), 4)) ==
          std::vector<Int>{1, 1, 2, 4, 8});
    CHECK(int_coeffs(series_of(bounded_path_gf(PathFamily::N, 0, 0, 1), 4)) ==
          std::vector<Int>{1, 1, 2, 3, 5});
    CHECK(brute_bounded_paths(PathFamily::M, 0, 0, 0, 5) == 1);
    CHECK(brute_bounded_paths(PathFamily::M, 0, 0, 1, 4) == 8);
    CHECK(brute_bounded_paths(PathFamily::O, 0, 0, 1, 2) == 1);
    for (int k = 0; k <= 4; ++k)
        for (int r = 0; r <= k; ++r)
            for (int s = 0; s <= k; ++s)
                for (auto family : {PathFamily::M, PathFamily::N, PathFamily::O}) {
                    const auto series = int_coeffs(series_of(bounded_path_gf(family, r, s, k), 12));
                    for (int len = 0; len <= 12; ++len)
                        CHECK(series[static_cast<size_t>(len)] ==
                              brute_bounded_paths(family, r, s, k, len));
                }
}
