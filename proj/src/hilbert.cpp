#include "framekz/hilbert.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace framekz {

void Tolerances::require_valid() const {
  const struct {
    const char* name;
    double value;
  } slacks[] = {
      {"eps_unit", eps_unit}, {"eps_herm", eps_herm}, {"eps_rank", eps_rank},
      {"eps_eig", eps_eig},   {"eps_id", eps_id},
  };
  for (const auto& s : slacks) {
    if (!(s.value > 0.0)) {
      throw std::invalid_argument(std::string("tolerance ") + s.name +
                                  " must be positive");
    }
  }
  if (eps_unit > eps_id) {
    throw std::invalid_argument("eps_unit must not exceed eps_id");
  }
}

bool all_finite(const Vec& v) noexcept { return v.allFinite(); }
bool all_finite(const Mat& m) noexcept { return m.allFinite(); }

void require_finite(const Vec& v, const char* what) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(what) + " contains a non-finite entry");
  }
}

void require_finite(const Mat& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + " contains a non-finite entry");
  }
}

double max_abs(const Mat& m) noexcept {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

Complex inner(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  // Eigen's dot is conjugate-linear in its *object* argument, so v.dot(u)
  // equals sum_k u_k conj(v_k).
  return v.dot(u);
}

Mat gram(const VecList& vs) {
  if (vs.empty()) {
    throw std::invalid_argument("gram: empty sequence");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(vs.size());
  Mat g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (vs[i].size() != vs[0].size()) {
      throw std::invalid_argument("gram: vectors of mixed dimension");
    }
    g(i, i) = Complex(vs[i].squaredNorm(), 0.0);
    for (Eigen::Index j = 0; j < i; ++j) {
      const Complex gij = inner(vs[i], vs[j]);
      g(i, j) = gij;
      g(j, i) = std::conj(gij);
    }
  }
  return g;
}

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

bool is_contraction(const Mat& m, const Tolerances& tol) {
  tol.require_valid();
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_contraction: matrix must be square");
  }
  return operator_norm(m) <= 1.0 + tol.eps_eig;
}

bool is_projection(const Mat& m, const Tolerances& tol) {
  tol.require_valid();
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_projection: matrix must be square");
  }
  if (max_abs(m - m.adjoint()) > tol.eps_herm) return false;
  return operator_norm(m * m - m) <= tol.eps_id;
}

Mat invert_unit_lower(const Mat& l) {
  if (l.rows() != l.cols()) {
    throw std::invalid_argument("invert_unit_lower: matrix must be square");
  }
  const Eigen::Index n = l.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(l(i, i) - Complex(1.0)) > 1e-12) {
      throw std::invalid_argument("invert_unit_lower: diagonal must be 1");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(l(i, j)) > 1e-12) {
        throw std::invalid_argument("invert_unit_lower: upper part must be 0");
      }
    }
  }
  Mat inv = Mat::Identity(n, n);
  // Column-by-column forward substitution with implicit unit diagonal.
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = c + 1; r < n; ++r) {
      Complex s = l(r, c);
      for (Eigen::Index k = c + 1; k < r; ++k) {
        s += l(r, k) * inv(k, c);
      }
      inv(r, c) = -s;
    }
  }
  return inv;
}

}  // namespace framekz
