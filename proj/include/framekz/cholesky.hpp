#pragma once

#include "framekz/types.hpp"

namespace framekz {

/// Greedy smallest-index pivots of a Hermitian PSD matrix.  `indices` are
/// 1-based positions into B, strictly increasing; deltas[k] equals the
/// determinant of the pivot block B[n_1..n_{k+1}, n_1..n_{k+1}].
struct PivotSequence {
  std::vector<int> indices;
  std::vector<double> deltas;

  std::size_t rank() const { return indices.size(); }
};

/// Lower-triangular V with B = VV*; only the first `rank` columns are
/// nonzero.  Diagonal-position entries v_{n_k k} are real positive.
struct CholeskyFactor {
  Mat v;
  int rank = 0;
  PivotSequence pivots;
};

/// Throws ValidationError unless B is Hermitian within tol.eps_herm and has
/// smallest eigenvalue >= -tol.eps_eig (both relative to max(1, max|B|)).
void require_hermitian_psd(const Mat& b, const Tolerances& tol,
                           const char* what);

/// Greedy pivot selection: scan indices in increasing order, accept n as a
/// pivot when the Schur-complement diagonal (= Delta_{k+1}/Delta_k) exceeds
/// tol.eps_rank * max_diag(B).
PivotSequence pivot_sequence(const Mat& b, const Tolerances& tol = {});

/// B-inner product of coefficient vectors, <u, v>_B = sum_{a,b} u_a
/// conj(v_b) B(a,b), conjugate-linear in the second slot.
Complex b_inner(const Mat& b, const Vec& u, const Vec& v);

/// For a non-pivot index n (1-based), the unique coefficients lambda_{n,1..i}
/// over the pivots preceding n with sum_k lambda_{nk} B(n_k,n_l) = B(n,n_l);
/// the residual delta_n - sum lambda_{nk} delta_{n_k} is then B-null.
std::vector<Complex> lambda_coefficients(const Mat& b, const PivotSequence& piv,
                                         int n);

/// Rows eta_1..eta_K in delta-coordinates: eta_i is supported on pivot
/// positions n_1..n_i, B-orthonormal, with real positive leading coefficient
/// sqrt(Delta_{i-1}/Delta_i) at position n_i.
Mat eta_basis(const Mat& b, const PivotSequence& piv);

/// Full factorization B = VV* with smallest-index pivoting.
CholeskyFactor cholesky_psd(const Mat& b, const Tolerances& tol = {});

}  // namespace framekz
