#include "patternlab/oracle.hpp"

#include <stdexcept>

namespace patternlab {

namespace {

std::vector<std::vector<Permutation>>& involution_cache() {
    static std::vector<std::vector<Permutation>> cache;
    return cache;
}

void build_involutions(int n) {
    auto& cache = involution_cache();
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        std::vector<Permutation> out;
        if (m == 0) {
            out.emplace_back();
        } else {
            for (const auto& p : cache[static_cast<size_t>(m - 1)])
                out.push_back(prepend_one(p));
            for (int j = 2; j <= m; ++j)
                for (const auto& p1 : cache[static_cast<size_t>(j - 2)])
                    for (const auto& p2 : cache[static_cast<size_t>(m - j)])
                        out.push_back(star(p1, p2));
        }
        cache.push_back(std::move(out));
    }
}

}  // namespace

const std::vector<Permutation>& involutions_3412(int n, int limit) {
    if (n < 0) throw std::invalid_argument("involutions_3412: n < 0");
    if (n > limit)
        throw std::length_error("involution length " + std::to_string(n) +
                                " exceeds limit " + std::to_string(limit));
    build_involutions(n);
    return involution_cache()[static_cast<size_t>(n)];
}

void for_each_involution(int n, const std::function<void(const Permutation&)>& fn,
                         int limit) {
    for (const auto& p : involutions_3412(n, limit)) fn(p);
}

std::uint64_t count_avoiders(const PatternSet& T, int n, int limit) {
    std::uint64_t count = 0;
    for (const auto& p : involutions_3412(n, limit)) {
        bool ok = true;
        for (const auto& pat : T.members())
            if (contains(p, pat)) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

std::uint64_t count_with_occurrences(const Permutation& pattern, std::uint64_t r,
                                     int n, int limit) {
    std::uint64_t count = 0;
    for (const auto& p : involutions_3412(n, limit))
        if (occurrence_count(p, pattern) == r) ++count;
    return count;
}

IntPoly statistic_distribution(Statistic stat, int n, int limit) {
    std::vector<Int> coeffs;
    auto bump = [&coeffs](std::uint64_t e) {
        if (coeffs.size() <= e) coeffs.resize(e + 1, Int(0));
        coeffs[e] += 1;
    };
    for (const auto& p : involutions_3412(n, limit)) {
        switch (stat) {
            case Statistic::Inv: bump(tau_k(p, 2)); break;
            case Statistic::LrMax: bump(static_cast<std::uint64_t>(classic_stats(p).lrmax)); break;
            case Statistic::RlMin: bump(static_cast<std::uint64_t>(classic_stats(p).rlmin)); break;
            case Statistic::Fix: bump(static_cast<std::uint64_t>(classic_stats(p).fix)); break;
            case Statistic::M: bump(decreasing_subseq_count(p)); break;
        }
    }
    return IntPoly(std::move(coeffs));
}

Int brute_bounded_paths(PathFamily family, int r, int s, int k, int len) {
    if (r < 0 || s < 0 || r > k || s > k)
        throw std::out_of_range("brute_bounded_paths: heights out of range");
    if (len < 0 || len > 14)
        throw std::invalid_argument("brute_bounded_paths: length out of range");
    std::vector<Int> dp(static_cast<size_t>(k) + 1, Int(0));
    dp[static_cast<size_t>(r)] = 1;
    for (int step = 0; step < len; ++step) {
        std::vector<Int> next(static_cast<size_t>(k) + 1, Int(0));
        for (int h = 0; h <= k; ++h) {
            const Int& v = dp[static_cast<size_t>(h)];
            if (v == 0) continue;
            if (h + 1 <= k) next[static_cast<size_t>(h + 1)] += v;
            if (h - 1 >= 0) next[static_cast<size_t>(h - 1)] += v;
            const bool level_ok = !(family == PathFamily::N && h == k) &&
                                  !(family == PathFamily::O && h == 0);
            if (level_ok) next[static_cast<size_t>(h)] += v;
        }
        dp = std::move(next);
    }
    return dp[static_cast<size_t>(s)];
}

}  // namespace patternlab
