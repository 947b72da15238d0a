#include "framekz/kaczmarz.hpp"

#include <cmath>
#include <string>

#include "framekz/hilbert.hpp"

namespace framekz {

namespace {

void require_same_dim(const VecList& vs, const char* what) {
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

}  // namespace

std::vector<Violation> check_unit_sequence(const VecList& es, const Tolerances& tol) {
  tol.require_valid();
  std::vector<Violation> bad;
  for (std::size_t n = 0; n < es.size(); ++n) {
    const double margin = std::abs(es[n].norm() - 1.0);
    if (margin > tol.eps_unit) {
      bad.push_back({"unit_norm[" + std::to_string(n) + "]", margin});
    }
  }
  return bad;
}

void require_unit_sequence(const VecList& es, const Tolerances& tol) {
  require_same_dim(es, "unit sequence");
  auto bad = check_unit_sequence(es, tol);
  if (!bad.empty()) {
    throw ValidationError("sequence contains non-unit vectors", std::move(bad));
  }
}

Vec kaczmarz_step(const Vec& x, const Vec& x_prev, const Vec& e, const Tolerances& tol) {
  tol.require_valid();
  if (x.size() != x_prev.size() || x.size() != e.size()) {
    throw std::invalid_argument("kaczmarz_step: dimension mismatch");
  }
  const double margin = std::abs(e.norm() - 1.0);
  if (margin > tol.eps_unit) {
    throw ValidationError("kaczmarz_step: direction is not a unit vector",
                          {{"unit_norm", margin}});
  }
  return x_prev + inner(x - x_prev, e) * e;
}

VecList auxiliary_sequence(const VecList& es, const Tolerances& tol) {
  require_unit_sequence(es, tol);
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

KaczmarzTrace run_kaczmarz(const Vec& x, const VecList& es, const Tolerances& tol) {
  require_unit_sequence(es, tol);
  require_finite(x, "run_kaczmarz: x");
  if (x.size() != es[0].size()) {
    throw std::invalid_argument("run_kaczmarz: dimension mismatch");
  }
  const VecList gs = auxiliary_sequence(es, tol);

  KaczmarzTrace trace;
  trace.iterates.reserve(es.size());
  trace.residual_norms.reserve(es.size());
  trace.coefficients.reserve(es.size());

  Vec x_prev = Vec::Zero(x.size());
  for (std::size_t n = 0; n < es.size(); ++n) {
    Vec x_n = x_prev + inner(x - x_prev, es[n]) * es[n];
    trace.residual_norms.push_back((x - x_n).norm());
    trace.coefficients.push_back(inner(x, gs[n]));
    trace.iterates.push_back(x_n);
    x_prev = std::move(x_n);
  }
  trace.defect = defect(x, gs);
  return trace;
}

Mat partial_sum_matrix(const VecList& es, const VecList& gs, std::size_t n) {
  if (es.size() != gs.size()) {
    throw std::invalid_argument("partial_sum_matrix: e/g length mismatch");
  }
  if (n >= es.size()) {
    throw std::invalid_argument("partial_sum_matrix: index out of range");
  }
  const Eigen::Index d = es[0].size();
  Mat s = Mat::Zero(d, d);
  for (std::size_t j = 0; j <= n; ++j) {
    if (es[j].size() != d || gs[j].size() != d) {
      throw std::invalid_argument("partial_sum_matrix: vectors of mixed dimension");
    }
    s += gs[j] * es[j].adjoint();
  }
  return s;
}

Mat projection_product(const VecList& es, std::size_t n) {
  if (n >= es.size()) {
    throw std::invalid_argument("projection_product: index out of range");
  }
  const Eigen::Index d = es[0].size();
  Mat prod = Mat::Identity(d, d);
  for (std::size_t k = 0; k <= n; ++k) {
    if (es[k].size() != d) {
      throw std::invalid_argument("projection_product: vectors of mixed dimension");
    }
    const Mat p = Mat::Identity(d, d) - es[k] * es[k].adjoint();
    prod = p * prod;
  }
  return prod;
}

double energy_identity_residual(const Vec& x, const KaczmarzTrace& trace) {
  if (trace.iterates.size() != trace.residual_norms.size() ||
      trace.iterates.size() != trace.coefficients.size() || trace.iterates.empty()) {
    throw std::invalid_argument("energy_identity_residual: malformed trace");
  }
  if (trace.iterates[0].size() != x.size()) {
    throw std::invalid_argument("energy_identity_residual: trace does not match x");
  }
  const double x2 = x.squaredNorm();
  double worst = 0.0;
  double coef_energy = 0.0;
  for (std::size_t n = 0; n < trace.residual_norms.size(); ++n) {
    coef_energy += std::norm(trace.coefficients[n]);
    const double lhs = trace.residual_norms[n] * trace.residual_norms[n];
    worst = std::max(worst, std::abs(lhs - (x2 - coef_energy)));
  }
  return worst;
}

bool convergence_lower_bound_check(const KaczmarzTrace& trace, const VecList& es,
                                   const Tolerances& tol) {
  tol.require_valid();
  if (trace.residual_norms.size() != es.size()) {
    throw std::invalid_argument("convergence_lower_bound_check: trace/sequence mismatch");
  }
  for (std::size_t n = 1; n < es.size(); ++n) {
    const double overlap = std::abs(inner(es[n - 1], es[n]));
    if (trace.residual_norms[n] < overlap * trace.residual_norms[n - 1] - tol.eps_id) {
      return false;
    }
  }
  return true;
}

double defect(const Vec& x, const VecList& gs) {
  double energy = 0.0;
  for (const Vec& g : gs) {
    if (g.size() != x.size()) {
      throw std::invalid_argument("defect: dimension mismatch");
    }
    energy += std::norm(inner(x, g));
  }
  return x.squaredNorm() - energy;
}

}  // namespace framekz
