#pragma once

#include "framekz/types.hpp"

namespace framekz {

/// Strictly lower triangular M (pairwise overlaps of a unit-vector sequence)
/// and its companion U with (I+U)(I+M) = I.
struct TriangularPair {
  Mat m;
  Mat u;

  Eigen::Index size() const { return m.rows(); }
};

/// M[i][j] = <e_i, e_j> for i > j, zero elsewhere.
Mat strict_lower_gram(const VecList& es, const Tolerances& tol = {});

/// M from strict_lower_gram, U = invert_unit_lower(I+M) - I.
TriangularPair triangular_pair(const VecList& es, const Tolerances& tol = {});

/// g_i = e_i + sum_{k<i} u_{ik} e_k — the closed-form coefficient expansion of
/// the auxiliary recurrence.
VecList coefficients_c(const TriangularPair& pair, const VecList& es);

/// I - U U*.  Equals the Gram matrix of the auxiliary sequence.
Mat gram_via_u(const TriangularPair& pair);

/// Operator norm of (I+U)(I+M+M*)(I+U*) - (I-UU*).
double identity13_residual(const TriangularPair& pair);

/// Tr(I - UU*) = sum_n ||g_n||^2.
double trace_dimension(const TriangularPair& pair);

/// ||UU* - U'U'*||_max for the pairs built from each sequence.
double equivalence_margin(const VecList& es, const VecList& es2,
                          const Tolerances& tol = {});

/// True iff equivalence_margin <= tol.eps_id (two unit-vector sequences
/// generate unitarily equivalent auxiliary sequences).
bool equivalence_check(const VecList& es, const VecList& es2,
                       const Tolerances& tol = {});

}  // namespace framekz
