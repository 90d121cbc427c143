#include "sdsolid/linalg.hpp"

#include <utility>

namespace sds {

namespace {

/// Forward elimination shared by rank and rref. Returns pivot columns; m is
/// left in row echelon form with unit pivots.
std::vector<int> eliminate(smat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int src = -1;
        for (int i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) {
                src = i;
                break;
            }
        }
        if (src < 0) continue;
        std::swap(m[r], m[src]);
        scalar inv = m[r][c].inv();
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            scalar f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_of(smat m) { return static_cast<int>(eliminate(m).size()); }

smat rref_of(smat m, std::vector<int>* pivot_cols) {
    std::vector<int> pivots = eliminate(m);
    const int rank = static_cast<int>(pivots.size());
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    // back-substitution
    for (int r = rank - 1; r >= 0; --r) {
        int c = pivots[r];
        for (int i = 0; i < r; ++i) {
            if (m[i][c].is_zero()) continue;
            scalar f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
    }
    m.resize(rank);
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return m;
}

std::vector<std::vector<scalar>> kernel_basis(const smat& m, const field& fld, int ncols) {
    std::vector<int> pivots;
    smat r = rref_of(m, &pivots);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<scalar>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<scalar> v(ncols, fld.zero());
        v[free] = fld.one();
        for (std::size_t row = 0; row < r.size(); ++row) {
            // pivot variable = -(coefficient of the free variable)
            v[pivots[row]] = -r[row][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sds
