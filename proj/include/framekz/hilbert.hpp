#pragma once

#include "framekz/types.hpp"

namespace framekz {

/// Inner product on C^d, conjugate-linear in the second slot:
/// inner(u, v) = sum_k u_k * conj(v_k).
Complex inner(const Vec& u, const Vec& v);

/// Gram matrix G(i, j) = inner(v_i, v_j).  Hermitian by construction.
Mat gram(const VecList& vs);

/// Largest singular value.  Defined as 0 for an empty matrix.
double operator_norm(const Mat& m);

/// True when operator_norm(m) <= 1 + tol.eps_eig.
bool is_contraction(const Mat& m, const Tolerances& tol = {});

/// True when m is Hermitian and idempotent within tol.eps_id.
bool is_projection(const Mat& m, const Tolerances& tol = {});

/// Inverse of a unit lower-triangular matrix (ones on the diagonal, zero
/// above) by forward substitution.  Rejects malformed input.
Mat invert_unit_lower(const Mat& l);

}  // namespace framekz
