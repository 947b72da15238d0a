#include "framekz/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "framekz/cholesky.hpp"
#include "framekz/hilbert.hpp"
#include "framekz/kaczmarz.hpp"

namespace framekz {

namespace {

void require_nonempty_uniform(const VecList& vs, const char* what) {
  if (vs.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty sequence");
  }
  for (const Vec& v : vs) {
    if (v.size() != vs[0].size()) {
      throw std::invalid_argument(std::string(what) + ": vectors of mixed dimension");
    }
    require_finite(v, what);
  }
}

Mat columns(const VecList& vs) {
  Mat m(vs[0].size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    m.col(static_cast<Eigen::Index>(j)) = vs[j];
  }
  return m;
}

// The auxiliary recurrence without unit-norm validation, for measuring how
// well synthesized vectors reproduce their target sequence.
VecList recurrence_unchecked(const VecList& es) {
  VecList gs;
  gs.reserve(es.size());
  gs.push_back(es[0]);
  for (std::size_t n = 1; n < es.size(); ++n) {
    Vec g = es[n];
    for (std::size_t i = 0; i < n; ++i) {
      g -= inner(es[n], es[i]) * gs[i];
    }
    gs.push_back(std::move(g));
  }
  return gs;
}

// Unit-norm drift of the constructed vectors, then snap them to exact unit
// norm so downstream validation at eps_unit never trips on roundoff.
void finalize_units(SynthesisResult& r, const VecList& target) {
  for (Vec& e : r.units) {
    const double n = e.norm();
    r.max_unit_norm_error = std::max(r.max_unit_norm_error, std::abs(n - 1.0));
    if (n > 0.5) e /= n;
  }
  const VecList back = recurrence_unchecked(r.units);
  for (std::size_t n = 0; n < target.size(); ++n) {
    r.max_recurrence_error =
        std::max(r.max_recurrence_error, (back[n] - target[n]).cwiseAbs().maxCoeff());
  }
}

}  // namespace

bool spans_space(const VecList& vs, const Tolerances& tol) {
  tol.require_valid();
  if (vs.empty()) return false;
  const Eigen::Index d = vs[0].size();
  if (static_cast<Eigen::Index>(vs.size()) < d) return false;
  Eigen::JacobiSVD<Mat> svd(columns(vs));
  const auto& sv = svd.singularValues();
  return sv(d - 1) > tol.eps_rank * sv(0);
}

BesselValidation validate_bessel(const VecList& gs, const Tolerances& tol) {
  tol.require_valid();
  require_nonempty_uniform(gs, "validate_bessel");

  BesselValidation v;
  v.vectors = gs;
  const double g0_norm = gs[0].norm();
  v.g0_norm_error = std::abs(g0_norm - 1.0);
  if (v.g0_norm_error > tol.eps_unit) {
    v.violations.push_back({"g0_norm", v.g0_norm_error});
  } else {
    v.vectors[0] /= g0_norm;
  }

  for (std::size_t n = 1; n < v.vectors.size(); ++n) {
    v.g0_orth_error = std::max(v.g0_orth_error,
                               std::abs(inner(v.vectors[0], v.vectors[n])));
  }
  if (v.g0_orth_error > tol.eps_id) {
    v.violations.push_back({"g0_orthogonality", v.g0_orth_error});
  }

  v.contraction_excess = std::max(0.0, operator_norm(gram(v.vectors)) - 1.0);
  if (v.contraction_excess > tol.eps_eig) {
    v.violations.push_back({"gram_contraction", v.contraction_excess});
  }

  v.ok = v.violations.empty();
  return v;
}

VecList require_bessel(const VecList& gs, const Tolerances& tol) {
  BesselValidation v = validate_bessel(gs, tol);
  if (!v.ok) {
    throw ValidationError("sequence is not a normalized Bessel sequence",
                          std::move(v.violations));
  }
  return std::move(v.vectors);
}

bool is_tight_frame(const VecList& gs, const Tolerances& tol) {
  const VecList vecs = require_bessel(gs, tol);
  return spans_space(vecs, tol) && is_projection(gram(vecs), tol);
}

SynthesisResult synthesize_triangular(const VecList& gs, const Tolerances& tol) {
  const VecList vecs = require_bessel(gs, tol);
  const auto lp1 = static_cast<Eigen::Index>(vecs.size());
  const Mat a = Mat::Identity(lp1, lp1) - gram(vecs);

  const double border =
      std::max(a.row(0).cwiseAbs().maxCoeff(), a.col(0).cwiseAbs().maxCoeff());
  if (border > tol.eps_id) {
    throw ValidationError("first row/column of I - Gram is not zero",
                          {{"a_border", border}});
  }

  const Eigen::Index l = lp1 - 1;
  const CholeskyFactor f = cholesky_psd(a.bottomRightCorner(l, l), tol);
  Mat u = Mat::Zero(lp1, lp1);
  u.block(1, 0, l, l) = f.v;
  const Mat m = invert_unit_lower(Mat::Identity(lp1, lp1) + u) - Mat::Identity(lp1, lp1);

  SynthesisResult r;
  r.method = SynthesisMethod::triangular;
  r.units.reserve(vecs.size());
  for (Eigen::Index i = 0; i < lp1; ++i) {
    Vec e = vecs[i];
    for (Eigen::Index k = 0; k < i; ++k) {
      e += m(i, k) * vecs[k];
    }
    r.units.push_back(std::move(e));
  }
  finalize_units(r, vecs);
  return r;
}

SynthesisResult synthesize_admissible(const VecList& gs, const Tolerances& tol) {
  const VecList vecs = require_bessel(gs, tol);
  const Eigen::Index d = vecs[0].size();

  SynthesisResult r;
  r.method = SynthesisMethod::admissible;
  r.units.push_back(vecs[0]);

  Mat s = Mat::Zero(d, d);
  for (std::size_t n = 1; n < vecs.size(); ++n) {
    s += vecs[n - 1] * r.units[n - 1].adjoint();
    const Mat t = Mat::Identity(d, d) - s;

    Eigen::JacobiSVD<Mat> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    // I - S is a contraction, so rank decisions are anchored at scale 1: a
    // threshold relative to sv(0) alone breaks down when the whole operator
    // is legitimately tiny (long sequences with small overlaps) and roundoff
    // noise, which is absolute, would masquerade as extra rank.
    const double rank_floor = tol.eps_rank * std::max(1.0, sv(0));
    Eigen::Index rank = 0;
    while (rank < d && sv(rank) > rank_floor) ++rank;

    // Minimal-norm least-squares solution of (I - S_{n-1}) y = g_n.
    Vec rhs_u = svd.matrixU().adjoint() * vecs[n];
    Vec y = Vec::Zero(d);
    for (Eigen::Index i = 0; i < rank; ++i) {
      y += (rhs_u(i) / sv(i)) * svd.matrixV().col(i);
    }

    const double lsq_residual = (t * y - vecs[n]).norm();
    if (lsq_residual > tol.eps_id) {
      throw ValidationError(
          "no unit-vector sequence reproduces this input (inconsistent step " +
              std::to_string(n) + ")",
          {{"lsq_residual[" + std::to_string(n) + "]", lsq_residual}});
    }
    const double y_norm = y.norm();
    if (y_norm > 1.0 + tol.eps_id) {
      throw ValidationError(
          "solution norm exceeds 1 at step " + std::to_string(n) +
              " (input is not a contraction)",
          {{"y_norm[" + std::to_string(n) + "]", y_norm - 1.0}});
    }
    const double lambda = std::sqrt(std::max(0.0, 1.0 - y_norm * y_norm));

    const Eigen::Index kernel_dim = d - rank;
    Vec e_n = y;
    double containment = r.units[n - 1].norm();
    if (kernel_dim > 0) {
      const Mat kernel = svd.matrixV().rightCols(kernel_dim);
      const Vec proj = kernel * (kernel.adjoint() * r.units[n - 1]);
      containment = (r.units[n - 1] - proj).norm();
      if (lambda > 0.0) {
        Vec u;
        if (proj.norm() > tol.eps_rank) {
          u = proj / proj.norm();
        } else {
          // Kernel does not see e_{n-1}; fall back to a deterministic kernel
          // direction with its largest entry made real positive.
          u = kernel.col(0);
          Eigen::Index imax = 0;
          u.cwiseAbs().maxCoeff(&imax);
          const Complex piv = u(imax);
          if (std::abs(piv) > 0.0) u *= std::conj(piv) / std::abs(piv);
        }
        e_n = y + lambda * u;
      }
    } else if (lambda > 0.0) {
      throw ValidationError(
          "cannot complete step " + std::to_string(n) +
              " to unit norm: operator has trivial kernel",
          {{"kernel_missing[" + std::to_string(n) + "]", lambda}});
    }

    if (lambda > 0.0 && kernel_dim >= 1) {
      r.kernel_events.push_back({static_cast<int>(n), static_cast<int>(kernel_dim),
                                 containment, y_norm, lambda});
      if (kernel_dim > 1) r.unique = false;
    }
    r.units.push_back(std::move(e_n));
  }

  finalize_units(r, vecs);
  return r;
}

StabilityReport stability_report(const VecList& vs, SequenceKind kind,
                                 const Tolerances& tol) {
  tol.require_valid();
  require_nonempty_uniform(vs, "stability_report");
  if (kind == SequenceKind::units) {
    require_unit_sequence(vs, tol);
  }
  const auto lp1 = static_cast<int>(vs.size());
  const auto d = static_cast<int>(vs[0].size());

  StabilityReport rep;
  for (int n = 0; n + 1 < lp1; ++n) {
    rep.consecutive_overlaps.push_back(std::abs(inner(vs[n], vs[n + 1])));
  }

  const int n_lo = (kind == SequenceKind::units) ? 0 : 1;
  rep.max_tested = (kind == SequenceKind::units) ? std::max(lp1 - d, n_lo - 1)
                                                 : lp1 - 1;
  rep.stable_through = n_lo - 1;
  for (int n = n_lo; n <= rep.max_tested; ++n) {
    VecList tail;
    if (kind == SequenceKind::bessel) tail.push_back(vs[0]);
    tail.insert(tail.end(), vs.begin() + n, vs.end());
    if (!spans_space(tail, tol)) break;
    rep.stable_through = n;
  }
  return rep;
}

bool proposition2_check(const VecList& es, const Tolerances& tol) {
  const VecList gs = auxiliary_sequence(es, tol);
  const StabilityReport g_rep = stability_report(gs, SequenceKind::bessel, tol);
  const StabilityReport e_rep = stability_report(es, SequenceKind::units, tol);

  bool overlaps_ok = true;
  for (double o : e_rep.consecutive_overlaps) {
    if (o <= tol.eps_rank) overlaps_ok = false;
  }
  return g_rep.stable() == (e_rep.stable() && overlaps_ok);
}

}  // namespace framekz
