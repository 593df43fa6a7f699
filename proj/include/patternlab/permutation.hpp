#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace patternlab {

// A permutation of {1,...,n} in one-line notation.  The empty permutation
// (n = 0) is a first-class value.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);

    // Accepts whitespace-separated entries ("3 4 1 2") or, for n <= 9, the
    // compact digit form ("3412").  Throws std::invalid_argument with the
    // offending token on malformed input.
    static Permutation parse(const std::string& text);

    static Permutation identity(int n);
    static Permutation decreasing(int n);  // n n-1 ... 2 1

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    const std::vector<int>& values() const { return values_; }

    // 1-based application: (*this)(i) = pi(i).
    int operator()(int i) const { return values_[static_cast<size_t>(i) - 1]; }

    bool is_involution() const;

    // Compact digits for n <= 9, space-separated otherwise.
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    // Orders by (length, lexicographic one-line values).
    friend bool operator<(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.values_ < b.values_;
    }

private:
    std::vector<int> values_;
};

// Number of subsequences of host whose pairwise comparisons match pattern.
// The empty pattern occurs exactly once in every host.
std::uint64_t occurrence_count(const Permutation& host, const Permutation& pattern);

bool contains(const Permutation& host, const Permutation& pattern);
inline bool avoids(const Permutation& host, const Permutation& pattern) {
    return !contains(host, pattern);
}

// Number of strictly decreasing subsequences of length k (0 for k <= 0).
std::uint64_t tau_k(const Permutation& p, int k);

// Sum over k >= 1 of tau_k: the number of nonempty decreasing subsequences.
std::uint64_t decreasing_subseq_count(const Permutation& p);

struct ClassicStats {
    std::uint64_t inv = 0;
    int lrmax = 0;
    int rlmin = 0;
    int fix = 0;
};
ClassicStats classic_stats(const Permutation& p);

// p1 * p2 = |p1|+2, p1^{+1}, 1, p2^{+(|p1|+2)}.
Permutation star(const Permutation& p1, const Permutation& p2);

// 1, p^{+1}.
Permutation prepend_one(const Permutation& p);

// Unique decomposition into complete blocks, each rank-normalized.
std::vector<Permutation> complete_decompose(const Permutation& p);

// Reassemble complete blocks with cumulative shifts.
Permutation assemble_blocks(const std::vector<Permutation>& blocks);

// The five-case map stripping a leading maximum and/or trailing 1.
Permutation overline_map(const Permutation& p);

// Drops a leading complete block equal to 1, renormalizing the rest.
Permutation beta_map(const Permutation& p);

// |p|+2, p^{+1}, 1.
Permutation wrap_kpi1(const Permutation& p);

// Layered permutation with descending runs of the given sizes.
Permutation layered(const std::vector<int>& parts);

Permutation reverse_complement(const Permutation& p);
Permutation inverse_perm(const Permutation& p);

}  // namespace patternlab
