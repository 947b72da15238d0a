#pragma once

#include <optional>

#include "framekz/types.hpp"

namespace framekz {

enum class SynthesisMethod { triangular, admissible };

enum class SequenceKind { units, bessel };

/// Outcome of validating a candidate normalized Bessel sequence.  When `ok`,
/// `vectors` holds the accepted sequence with g_0 rescaled to exact unit norm;
/// otherwise `violations` lists every failed invariant with its margin.
struct BesselValidation {
  bool ok = false;
  VecList vectors;
  double g0_norm_error = 0.0;      ///< | ||g_0|| - 1 |
  double g0_orth_error = 0.0;      ///< max_n |<g_0, g_n>|, n >= 1
  double contraction_excess = 0.0; ///< max(0, ||Gram|| - 1)
  std::vector<Violation> violations;
};

/// One step of the admissible synthesis that had to reach into the kernel of
/// I - S_{N-1} (lambda > 0), or found it larger than one-dimensional.
struct KernelEvent {
  int step = 0;
  int kernel_dim = 0;
  double containment_residual = 0.0;  ///< distance of e_{N-1} from the kernel
  double y_norm = 0.0;
  double lambda = 0.0;
};

struct SynthesisResult {
  VecList units;
  SynthesisMethod method = SynthesisMethod::triangular;
  double max_unit_norm_error = 0.0;   ///< max_i | ||e_i|| - 1 |
  double max_recurrence_error = 0.0;  ///< max entrywise |aux(units) - g|
  bool unique = true;                 ///< false when a >1-dim kernel was used
  std::vector<KernelEvent> kernel_events;
};

/// Largest N through which every tested tail keeps full span, the range
/// tested, and the consecutive overlaps |<v_n, v_{n+1}>|.  Units: tails
/// {v_N..v_L} for N in [0, L+1-d].  Bessel: {v_0} plus {v_N..v_L} for N in
/// [1, L].  stable_through == max_tested means every test passed.
struct StabilityReport {
  int stable_through = -1;
  int max_tested = -1;
  std::vector<double> consecutive_overlaps;

  bool stable() const { return stable_through == max_tested; }
};

/// True when the columns keep d-dimensional span: sigma_d > eps_rank * sigma_1.
bool spans_space(const VecList& vs, const Tolerances& tol = {});

BesselValidation validate_bessel(const VecList& gs, const Tolerances& tol = {});

/// validate_bessel that throws ValidationError on failure and returns the
/// normalized vectors on success.
VecList require_bessel(const VecList& gs, const Tolerances& tol = {});

/// Spanning sequence whose Gram matrix is an orthogonal projection.
bool is_tight_frame(const VecList& gs, const Tolerances& tol = {});

/// Gram-matrix route: factor I - gram(g) with the first row/column stripped,
/// pad the factor back with a zero row/column, invert the unit triangle, and
/// expand e_i = g_i + sum_{k<i} m_ik g_k.
SynthesisResult synthesize_triangular(const VecList& gs, const Tolerances& tol = {});

/// Sequential route: e_0 = g_0; each e_N = y_N + lambda u with y_N the
/// minimal-norm solution of (I - S_{N-1}) y = g_N, u the kernel direction
/// closest to e_{N-1}, lambda = sqrt(max(0, 1 - ||y_N||^2)); the output is
/// admissible (<e_N, e_{N-1}> >= 0).
SynthesisResult synthesize_admissible(const VecList& gs, const Tolerances& tol = {});

StabilityReport stability_report(const VecList& vs, SequenceKind kind,
                                 const Tolerances& tol = {});

/// Evaluates both sides of the stability equivalence — auxiliary-sequence
/// stability vs unit-sequence stability plus nonvanishing consecutive
/// overlaps — and reports whether they agree.
bool proposition2_check(const VecList& es, const Tolerances& tol = {});

}  // namespace framekz
