#include "patternlab/trimatrix.hpp"

#include <cstdlib>
#include <stdexcept>

namespace patternlab {

TriMatrix::TriMatrix(TriKind kind, int k) : kind_(kind), k_(k) {
    if (k < 0) throw std::invalid_argument("TriMatrix: k < 0");
    const int n = k + 1;
    e_.assign(static_cast<size_t>(n), std::vector<IntPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) <= 1) e_[static_cast<size_t>(i)][static_cast<size_t>(j)] = IntPoly::x();
    if (kind == TriKind::B) e_[static_cast<size_t>(k)][static_cast<size_t>(k)] = IntPoly{};
    if (kind == TriKind::C) e_[0][0] = IntPoly{};
}

const IntPoly& TriMatrix::entry(int i, int j) const {
    if (i < 0 || j < 0 || i > k_ || j > k_)
        throw std::out_of_range("TriMatrix: index out of range");
    return e_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

namespace {

// Fraction-free (Bareiss) determinant over Z[x].
IntPoly bareiss_det(std::vector<std::vector<IntPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return IntPoly(1);
    IntPoly prev(1);
    int sign = 1;
    for (int col = 0; col < n - 1; ++col) {
        if (m[static_cast<size_t>(col)][static_cast<size_t>(col)].is_zero()) {
            int swap_row = -1;
            for (int i = col + 1; i < n; ++i)
                if (!m[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return {};
            std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        const IntPoly& pivot = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                IntPoly v = m[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                            m[static_cast<size_t>(i)][static_cast<size_t>(col)] *
                                m[static_cast<size_t>(col)][static_cast<size_t>(j)];
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.divide_exact(prev);
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(col)] = IntPoly{};
        }
        prev = pivot;
    }
    IntPoly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? -det : det;
}

std::vector<std::vector<IntPoly>> identity_minus(const TriMatrix& m) {
    const int n = m.size();
    std::vector<std::vector<IntPoly>> a(static_cast<size_t>(n),
                                        std::vector<IntPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = -m.entry(i, j);
            if (i == j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] += IntPoly(1);
        }
    return a;
}

}  // namespace

std::pair<IntPoly, IntPoly> det_and_minor(const TriMatrix& m, int s, int r) {
    if (s < 0 || r < 0 || s > m.bound() || r > m.bound())
        throw std::out_of_range("det_and_minor: index out of range");
    auto a = identity_minus(m);
    IntPoly det = bareiss_det(a);
    std::vector<std::vector<IntPoly>> sub;
    for (int i = 0; i < m.size(); ++i) {
        if (i == s) continue;
        std::vector<IntPoly> row;
        for (int j = 0; j < m.size(); ++j)
            if (j != r) row.push_back(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        sub.push_back(std::move(row));
    }
    return {std::move(det), bareiss_det(std::move(sub))};
}

RatFunc bounded_path_gf(PathFamily family, int r, int s, int k) {
    TriKind kind = family == PathFamily::M   ? TriKind::A
                   : family == PathFamily::N ? TriKind::B
                                             : TriKind::C;
    TriMatrix m(kind, k);
    auto [det, minor] = det_and_minor(m, s, r);
    if ((r + s) % 2 != 0) minor = -minor;
    return RatFunc(std::move(minor), std::move(det));
}

}  // namespace patternlab
