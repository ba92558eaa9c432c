#pragma once
#include <cstdint>
#include <vector>

#include "zpg/polyfp.hpp"
#include "zpg/rational.hpp"

namespace zpg {

// Dense row-major matrices; small sizes only (group algebra dimensions).
using FpMat = std::vector<std::vector<uint64_t>>;
using QMat = std::vector<std::vector<Rational>>;

size_t fp_rank(FpMat m, uint64_t p);
// Basis of the column space, returned as columns (each a vector of length
// rows); deterministic (leftmost independent columns).
FpMat fp_column_basis(const FpMat& m, uint64_t p);
// Basis of the right kernel {x : m x = 0}.
FpMat fp_kernel(const FpMat& m, uint64_t p);
// Solve m x = rhs for each rhs column; throws SemanticError if inconsistent.
FpMat fp_solve(const FpMat& m, const FpMat& rhs_cols, uint64_t p);
// Characteristic polynomial det(zI - m) via Hessenberg reduction.
PolyFp fp_charpoly(FpMat m, uint64_t p);
FpMat fp_mat_mul(const FpMat& a, const FpMat& b, uint64_t p);

size_t q_rank(QMat m);
QMat q_column_basis(const QMat& m);
QMat q_solve(const QMat& m, const QMat& rhs_cols);
// Indices of a row subset on which the given independent columns are
// invertible (pivot rows of a column echelon pass).
std::vector<size_t> q_pivot_rows(const QMat& basis_cols);
QMat q_mat_mul(const QMat& a, const QMat& b);
QMat q_inverse(const QMat& m);   // throws SemanticError if singular

} // namespace zpg
