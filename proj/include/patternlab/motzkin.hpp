#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "patternlab/numeric.hpp"
#include "patternlab/permutation.hpp"

namespace patternlab {

enum class Step : char { Up = 'U', Down = 'D', Level = 'L' };

// A lattice path over {U, D, L} that never dips below height 0 and ends at
// height 0.
class MotzkinPath {
public:
    MotzkinPath() = default;
    explicit MotzkinPath(std::vector<Step> steps);

    // Text form "ULUDDLUD", no separators.
    static MotzkinPath parse(const std::string& text);

    int size() const { return static_cast<int>(steps_.size()); }
    const std::vector<Step>& steps() const { return steps_; }

    // Height of the left endpoint of each step.
    std::vector<int> heights() const;

    std::string str() const;

    friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
    friend bool operator<(const MotzkinPath& a, const MotzkinPath& b) {
        return a.steps_ < b.steps_;
    }

private:
    std::vector<Step> steps_;
};

inline constexpr int kDefaultPathLimit = 16;

// Streams every path of M_n exactly once.  Throws std::length_error past the
// limit.
void for_each_motzkin_path(int n, const std::function<void(const MotzkinPath&)>& fn,
                           int limit = kDefaultPathLimit);

// M_n via the recurrence M_n = M_{n-1} + sum_{i=2}^n M_{i-2} M_{n-i}.
Int motzkin_number(int n);

// Sum over up/level steps of C(2 ht, k-1) plus sum over down steps of
// C(2 ht - 1, k-1).
std::uint64_t tau_k_path(const MotzkinPath& p, int k);

// The label-swapping bijection onto 3412-avoiding involutions.
Permutation phi(const MotzkinPath& p);

// Inverse of phi; throws std::domain_error if q is not a 3412-avoiding
// involution.
MotzkinPath phi_inverse(const Permutation& q);

// Reverses step order and swaps Up and Down.
MotzkinPath rc_path(const MotzkinPath& p);

}  // namespace patternlab
