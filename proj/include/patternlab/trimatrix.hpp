#pragma once

#include <utility>
#include <vector>

#include "patternlab/intpoly.hpp"
#include "patternlab/ratfunc.hpp"

namespace patternlab {

enum class TriKind : char {
    A = 'A',  // full band of x entries
    B = 'B',  // lower-right corner zeroed
    C = 'C',  // upper-left corner zeroed
};

// The (k+1) x (k+1) tridiagonal transfer matrix with every band entry equal
// to the monomial x, with one corner zeroed for the B and C variants.
class TriMatrix {
public:
    TriMatrix(TriKind kind, int k);

    TriKind kind() const { return kind_; }
    int bound() const { return k_; }
    int size() const { return k_ + 1; }
    const IntPoly& entry(int i, int j) const;

private:
    TriKind kind_;
    int k_;
    std::vector<std::vector<IntPoly>> e_;
};

// Returns det(I - m) and the (s, r) minor det(I - m; s, r), i.e. the
// determinant after deleting row s and column r.  Throws std::out_of_range
// for bad indices.
std::pair<IntPoly, IntPoly> det_and_minor(const TriMatrix& m, int s, int r);

// Path families bounded in [0, k]:
//   M - all of U/D/L allowed,
//   N - no level steps at height k,
//   O - no level steps at height 0.
enum class PathFamily : char { M = 'M', N = 'N', O = 'O' };

// Generating function by length for bounded paths from height r to height s,
// (-1)^{r+s} * minor / det over the matching matrix kind.
RatFunc bounded_path_gf(PathFamily family, int r, int s, int k);

}  // namespace patternlab
