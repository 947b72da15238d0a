#pragma once

#include "framekz/types.hpp"

namespace framekz {

/// One Kaczmarz run: iterates x_0..x_L, residual norms ||x - x_n||, frame
/// coefficients <x, g_n>, and the terminal defect ||x||^2 - sum |<x,g_n>|^2.
struct KaczmarzTrace {
  VecList iterates;
  std::vector<double> residual_norms;
  std::vector<Complex> coefficients;
  double defect = 0.0;
};

/// Margins |‖e_n‖ − 1| that exceed tol.eps_unit, named "unit_norm[n]".
std::vector<Violation> check_unit_sequence(const VecList& es,
                                           const Tolerances& tol = {});

/// Throws ValidationError when check_unit_sequence reports anything; also
/// rejects empty input and mixed dimensions (std::invalid_argument).
void require_unit_sequence(const VecList& es, const Tolerances& tol = {});

/// x_prev + <x - x_prev, e> e.  e must be a unit vector.
Vec kaczmarz_step(const Vec& x, const Vec& x_prev, const Vec& e,
                  const Tolerances& tol = {});

/// g_0 = e_0, g_n = e_n - sum_{i<n} <e_n, e_i> g_i (literal recurrence,
/// evaluated in index order).
VecList auxiliary_sequence(const VecList& es, const Tolerances& tol = {});

/// Full iteration from x_0 = <x, e_0> e_0.
KaczmarzTrace run_kaczmarz(const Vec& x, const VecList& es,
                           const Tolerances& tol = {});

/// S_n = sum_{j<=n} g_j e_j^* as a d x d matrix (the map y -> sum <y,e_j> g_j).
Mat partial_sum_matrix(const VecList& es, const VecList& gs, std::size_t n);

/// P_n P_{n-1} ... P_0 where P_k = I - e_k e_k^*.
Mat projection_product(const VecList& es, std::size_t n);

/// max over n of | ||x - x_n||^2 - (||x||^2 - sum_{j<=n} |<x,g_j>|^2) |.
double energy_identity_residual(const Vec& x, const KaczmarzTrace& trace);

/// ||x - x_n|| >= |<e_{n-1}, e_n>| ||x - x_{n-1}|| - eps_id for all n >= 1.
bool convergence_lower_bound_check(const KaczmarzTrace& trace, const VecList& es,
                                   const Tolerances& tol = {});

/// ||x||^2 - sum_n |<x, g_n>|^2.
double defect(const Vec& x, const VecList& gs);

}  // namespace framekz
