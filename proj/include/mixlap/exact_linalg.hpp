#pragma once

#include "mixlap/exact_matrix.hpp"

namespace mixlap {

/**
 * Exact determinant over Z[ω] by fraction-free (Bareiss) elimination. Every
 * intermediate entry is a minor of the input, so the exact divisions never
 * fail on valid ring elements. The 0×0 determinant is 1.
 */
EisensteinInt det(const ExactMatrix& m);

/// Reference determinant by recursive cofactor expansion. Cross-check path
/// for the test suite, not the default; guarded to small dimensions.
EisensteinInt det_cofactor_expansion(const ExactMatrix& m);

/// Signed minor: (−1)^(pos(i)+pos(j)) · det(m with row i, column j deleted),
/// positions 1-based in label order.
EisensteinInt cofactor(const ExactMatrix& m, int row_label, int col_label);

/// Rank over the fraction field of Z[ω], by fraction-free pivoting with
/// exact zero tests.
int rank(const ExactMatrix& m);

/// entry(i,j) == conj(entry(j,i)) for all i,j; false for non-square input.
bool is_hermitian(const ExactMatrix& m);

}  // namespace mixlap
