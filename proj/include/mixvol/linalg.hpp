#pragma once

#include <optional>
#include <vector>

#include "mixvol/rational.hpp"

namespace mixvol {

using RMat = std::vector<RVec>;  // row-major, rows may be empty

struct RowEchelon {
  RMat rows;                // nonzero rows of the reduced row echelon form
  std::vector<int> pivots;  // pivot column of each row
};

RowEchelon rref(RMat rows, int ncols);
int rank(const RMat& rows, int ncols);

/// Basis of {x : rows·x = 0}, one primitive integer vector per free column of
/// the reduced echelon form. Depends only on the row space.
RMat kernel(const RMat& rows, int ncols);

/// Canonical basis of span(vectors): reduced echelon rows scaled to
/// primitive integers.
RMat canonical_basis(const RMat& vectors, int ncols);

/// Unique solution of A·x = b, or nullopt when singular / inconsistent.
std::optional<RVec> solve(const RMat& a, const RVec& b);

Rational determinant(RMat m);

/// Orthogonal complement of span(vectors) in Q^n, canonical.
RMat orthogonal_complement(const RMat& vectors, int ncols);

bool in_span(const RMat& basis, const RVec& v, int ncols);

}  // namespace mixvol
