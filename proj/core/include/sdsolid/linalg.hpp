#pragma once

#include <vector>

#include "sdsolid/field.hpp"

namespace sds {

using smat = std::vector<std::vector<scalar>>;

/// Rank by Gaussian elimination; exact over both kinds of field.
int rank_of(smat m);

/// Reduced row echelon form. Zero rows are dropped; pivot_cols (if given)
/// receives the pivot column of each surviving row.
smat rref_of(smat m, std::vector<int>* pivot_cols = nullptr);

/// Basis of the right kernel {v : m.v = 0} for a matrix with ncols columns
/// (m may have any number of rows, including zero).
std::vector<std::vector<scalar>> kernel_basis(const smat& m, const field& fld, int ncols);

}  // namespace sds
