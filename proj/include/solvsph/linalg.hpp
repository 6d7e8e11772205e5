#pragma once

#include <optional>
#include <vector>

#include "solvsph/numeric.hpp"

namespace solvsph {

// ---------------------------------------------------------------------------
// Exact rational row operations. Matrices are row-major; a matrix may have
// zero rows but every row must have the same length.
// ---------------------------------------------------------------------------

// In-place reduced row echelon form; returns the rank.
int rref(QMat& m);

int rank_of(QMat m);

// Canonical basis of the row space (rref, zero rows dropped). Two spans are
// equal iff their canonical bases are equal.
QMat row_space_basis(QMat m);

bool spans_equal(const QMat& a, const QMat& b);

// Some x with x * rows = v, if any (rows need not be independent).
std::optional<QVec> solve_row_combination(const QMat& rows, const QVec& v);

// Canonical basis of { x : x * m = 0 }.
QMat left_kernel(const QMat& m);

// Canonical basis of span(a) ∩ span(b).
QMat span_intersection(const QMat& a, const QMat& b);

// Inverse of a square nonsingular matrix; throws errc::internal if singular.
QMat inverse(const QMat& m);

QVec mat_apply_left(const QVec& x, const QMat& m);  // x * m

// ---------------------------------------------------------------------------
// Integer normal forms.
// ---------------------------------------------------------------------------

// Canonical row-style Hermite normal form: echelon basis with positive
// pivots and entries above each pivot reduced into [0, pivot). Zero rows are
// dropped, so the result is a canonical basis of the integer row span.
IMat hnf(IMat m);

struct SmithResult {
  int rank = 0;
  // d_1 | d_2 | ... | d_rank, all positive.
  IVec invariant_factors;
  // Basis of the saturation of the input's rational row span inside Z^n
  // (rows of the inverse right transform); only filled when requested.
  IMat saturation_basis;
};

SmithResult smith_normal_form(IMat m, bool want_saturation = false);

}  // namespace solvsph
