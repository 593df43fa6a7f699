#pragma once

#include <cstdint>

#include "patternlab/ratfunc.hpp"

namespace patternlab {

// Generating functions for involutions containing exactly r decreasing
// subsequences of a fixed length, split by the parity of that length.

enum class Parity { Even, Odd };

struct OccurrenceSpec {
    int k = 0;           // half-length: pattern is 2k...21 or 2k+1...21
    std::uint64_t r = 0; // exact occurrence count
    Parity parity = Parity::Even;
    int b = 0;           // block bound derived from r

    // Derives k, parity and b from the pattern length; throws
    // std::invalid_argument if pattern_len < 2 or r < 1.
    static OccurrenceSpec make(int pattern_len, std::uint64_t r);
};

RatFunc occurrence_gf(const OccurrenceSpec& spec);

}  // namespace patternlab
