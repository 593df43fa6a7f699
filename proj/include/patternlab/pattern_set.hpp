#pragma once

#include <string>
#include <vector>

#include "patternlab/permutation.hpp"

namespace patternlab {

// A finite set of patterns, stored sorted by (length, lexicographic values)
// with duplicates removed.  The canonical key is a stable serialization used
// for memoization.
class PatternSet {
public:
    PatternSet() = default;
    explicit PatternSet(std::vector<Permutation> patterns);

    // Comma-separated permutations; an all-whitespace string is the empty set.
    static PatternSet parse(const std::string& text);

    const std::vector<Permutation>& members() const { return patterns_; }
    bool empty() const { return patterns_.empty(); }
    size_t size() const { return patterns_.size(); }

    bool contains_empty_pattern() const;

    // Dedupe plus removal of every pattern that contains another member as a
    // subsequence; avoidance semantics are unchanged.
    PatternSet canonicalize() const;

    std::string canonical_key() const;

    // Replaces each pattern pi by |pi|+2, pi^{+1}, 1.
    PatternSet kT1() const;
    PatternSet kT1_iter(int i) const;

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Permutation> patterns_;
};

}  // namespace patternlab
