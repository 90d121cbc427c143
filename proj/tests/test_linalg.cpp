#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sdsolid/linalg.hpp"

using namespace sds;

namespace {

// Laplace-expansion determinant: an independent oracle, exponential but exact.
scalar det_minor(const smat& m, const std::vector<int>& rows, const std::vector<int>& cols,
                 const field& fld) {
    int n = static_cast<int>(rows.size());
    if (n == 1) return m[rows[0]][cols[0]];
    scalar acc = fld.zero();
    bool neg = false;
    for (int i = 0; i < n; ++i) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (int j = 0; j < n; ++j) {
            if (j != i) sub_cols.push_back(cols[j]);
        }
        scalar term = m[rows[0]][cols[i]] * det_minor(m, sub_rows, sub_cols, fld);
        acc = neg ? acc - term : acc + term;
        neg = !neg;
    }
    return acc;
}

// Rank = size of the largest nonzero minor; tries every row/column subset.
int rank_by_minors(const smat& m, const field& fld) {
    int nr = static_cast<int>(m.size());
    int nc = nr ? static_cast<int>(m[0].size()) : 0;
    for (int k = std::min(nr, nc); k >= 1; --k) {
        for (unsigned rs = 0; rs < (1u << nr); ++rs) {
            if (__builtin_popcount(rs) != k) continue;
            std::vector<int> rows;
            for (int i = 0; i < nr; ++i) {
                if (rs & (1u << i)) rows.push_back(i);
            }
            for (unsigned cs = 0; cs < (1u << nc); ++cs) {
                if (__builtin_popcount(cs) != k) continue;
                std::vector<int> cols;
                for (int j = 0; j < nc; ++j) {
                    if (cs & (1u << j)) cols.push_back(j);
                }
                if (!det_minor(m, rows, cols, fld).is_zero()) return k;
            }
        }
    }
    return 0;
}

smat random_matrix(const field& fld, rng& gen, int nr, int nc) {
    smat m(nr, std::vector<scalar>(nc, fld.zero()));
    for (auto& row : m) {
        for (auto& v : row) v = fld.sample(gen);
    }
    return m;
}

smat random_rational_matrix(rng& gen, int nr, int nc) {
    field q = field::rationals();
    smat m(nr, std::vector<scalar>(nc, q.zero()));
    for (auto& row : m) {
        for (auto& v : row) {
            long num = static_cast<long>(gen.below(19)) - 9;
            unsigned long den = 1 + gen.below(9);
            v = q.from_rat(rat(num, den));
        }
    }
    return m;
}

// nr x nc product of random nr x r and r x nc factors: rank at most r.
smat low_rank_matrix(const field& fld, rng& gen, int nr, int nc, int r) {
    smat a = random_matrix(fld, gen, nr, r), b = random_matrix(fld, gen, r, nc);
    smat m(nr, std::vector<scalar>(nc, fld.zero()));
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nc; ++j) {
            scalar acc = fld.zero();
            for (int k = 0; k < r; ++k) acc = acc + a[i][k] * b[k][j];
            m[i][j] = acc;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rank agrees with the minor-expansion oracle") {
    field f7 = field::finite(7);
    field q = field::rationals();
    rng gen(2024);
    int checked = 0;
    while (checked < 200) {
        int nr = 1 + static_cast<int>(gen.below(6));
        int nc = 1 + static_cast<int>(gen.below(6));
        smat m;
        switch (checked % 4) {
            case 0: m = random_matrix(f7, gen, nr, nc); break;
            case 1: m = random_rational_matrix(gen, nr, nc); break;
            case 2:
                m = low_rank_matrix(f7, gen, nr, nc,
                                    1 + static_cast<int>(gen.below(std::min(nr, nc))));
                break;
            default: {
                field q121 = field::finite(11, 2);
                m = random_matrix(q121, gen, nr, nc);
                break;
            }
        }
        const field& fld = (checked % 4 == 1) ? q : m[0][0].fld();
        CHECK(rank_of(m) == rank_by_minors(m, fld));
        ++checked;
    }
}

TEST_CASE("kernel basis spans the right kernel exactly") {
    field f = field::finite(101);
    rng gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        int nr = 1 + static_cast<int>(gen.below(6));
        int nc = 2 + static_cast<int>(gen.below(9));
        smat m = random_matrix(f, gen, nr, nc);
        int r = rank_of(m);
        auto basis = kernel_basis(m, f, nc);
        CHECK(static_cast<int>(basis.size()) == nc - r);
        for (const auto& v : basis) {
            REQUIRE(static_cast<int>(v.size()) == nc);
            for (int i = 0; i < nr; ++i) {
                scalar acc = f.zero();
                for (int j = 0; j < nc; ++j) acc = acc + m[i][j] * v[j];
                CHECK(acc.is_zero());
            }
        }
        // Basis vectors are independent: stacked as rows they have full rank.
        if (!basis.empty()) CHECK(rank_of(basis) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("empty matrix has the full space as kernel") {
    field f = field::finite(13);
    auto basis = kernel_basis(smat{}, f, 5);
    CHECK(basis.size() == 5);
    CHECK(rank_of(basis) == 5);
}

TEST_CASE("rref is idempotent with strictly increasing pivots") {
    field f = field::finite(101);
    rng gen(99);
    for (int trial = 0; trial < 10; ++trial) {
        smat m = low_rank_matrix(f, gen, 5, 7, 3);
        std::vector<int> pivots;
        smat r = rref_of(m, &pivots);
        CHECK(static_cast<int>(r.size()) == rank_of(m));
        CHECK(pivots.size() == r.size());
        for (std::size_t i = 0; i + 1 < pivots.size(); ++i) CHECK(pivots[i] < pivots[i + 1]);
        for (std::size_t i = 0; i < r.size(); ++i) {
            CHECK(r[i][pivots[i]] == f.one());
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (j != i) CHECK(r[j][pivots[i]].is_zero());
            }
        }
        CHECK(rref_of(r, nullptr) == r);
    }
}

TEST_CASE("rank over the rationals has no intermediate blowup surprises") {
    // A Hilbert-like 6x6 matrix is notoriously ill-conditioned in floating
    // point but has exact full rank.
    field q = field::rationals();
    smat m(6, std::vector<scalar>(6, q.zero()));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) m[i][j] = q.from_rat(rat(1, i + j + 1));
    }
    CHECK(rank_of(m) == 6);
}
