#include "framekz/triangular.hpp"

#include "framekz/hilbert.hpp"
#include "framekz/kaczmarz.hpp"

namespace framekz {

Mat strict_lower_gram(const VecList& es, const Tolerances& tol) {
  require_unit_sequence(es, tol);
  const Eigen::Index n = static_cast<Eigen::Index>(es.size());
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      m(i, j) = inner(es[i], es[j]);
    }
  }
  return m;
}

TriangularPair triangular_pair(const VecList& es, const Tolerances& tol) {
  TriangularPair pair;
  pair.m = strict_lower_gram(es, tol);
  const Eigen::Index n = pair.m.rows();
  pair.u = invert_unit_lower(Mat::Identity(n, n) + pair.m) - Mat::Identity(n, n);
  return pair;
}

VecList coefficients_c(const TriangularPair& pair, const VecList& es) {
  if (pair.size() != static_cast<Eigen::Index>(es.size())) {
    throw std::invalid_argument("coefficients_c: pair size does not match sequence");
  }
  VecList gs;
  gs.reserve(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    Vec g = es[i];
    for (std::size_t k = 0; k < i; ++k) {
      g += pair.u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * es[k];
    }
    gs.push_back(std::move(g));
  }
  return gs;
}

Mat gram_via_u(const TriangularPair& pair) {
  const Eigen::Index n = pair.size();
  return Mat::Identity(n, n) - pair.u * pair.u.adjoint();
}

double identity13_residual(const TriangularPair& pair) {
  const Eigen::Index n = pair.size();
  const Mat id = Mat::Identity(n, n);
  const Mat lhs =
      (id + pair.u) * (id + pair.m + pair.m.adjoint()) * (id + pair.u.adjoint());
  return operator_norm(lhs - gram_via_u(pair));
}

double trace_dimension(const TriangularPair& pair) {
  return gram_via_u(pair).trace().real();
}

double equivalence_margin(const VecList& es, const VecList& es2, const Tolerances& tol) {
  if (es.size() != es2.size()) {
    throw std::invalid_argument("equivalence_margin: sequences of different length");
  }
  const TriangularPair a = triangular_pair(es, tol);
  const TriangularPair b = triangular_pair(es2, tol);
  return max_abs(a.u * a.u.adjoint() - b.u * b.u.adjoint());
}

bool equivalence_check(const VecList& es, const VecList& es2, const Tolerances& tol) {
  return equivalence_margin(es, es2, tol) <= tol.eps_id;
}

}  // namespace framekz
