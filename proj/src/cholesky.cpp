#include "framekz/cholesky.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace framekz {

namespace {

double max_diagonal(const Mat& b) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    m = std::max(m, b(i, i).real());
  }
  return m;
}

}  // namespace

void require_hermitian_psd(const Mat& b, const Tolerances& tol, const char* what) {
  tol.require_valid();
  if (b.rows() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
  require_finite(b, what);
  const double scale = std::max(1.0, max_abs(b));
  const double herm = max_abs(b - b.adjoint());
  if (herm > tol.eps_herm * scale) {
    throw ValidationError(std::string(what) + ": matrix is not Hermitian",
                          {{"hermitian_residual", herm}});
  }
  if (b.rows() == 0) return;
  Eigen::SelfAdjointEigenSolver<Mat> eig(Mat(0.5 * (b + b.adjoint())),
                                         Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues()(0);
  if (min_eig < -tol.eps_eig * scale) {
    throw ValidationError(std::string(what) + ": matrix is not positive semidefinite",
                          {{"psd_min_eigenvalue", min_eig}});
  }
}

PivotSequence pivot_sequence(const Mat& b, const Tolerances& tol) {
  return cholesky_psd(b, tol).pivots;
}

Complex b_inner(const Mat& b, const Vec& u, const Vec& v) {
  if (u.size() != b.rows() || v.size() != b.cols()) {
    throw std::invalid_argument("b_inner: dimension mismatch");
  }
  return (u.transpose() * b * v.conjugate()).value();
}

std::vector<Complex> lambda_coefficients(const Mat& b, const PivotSequence& piv,
                                         int n) {
  if (n < 1 || n > b.rows()) {
    throw std::invalid_argument("lambda_coefficients: index out of range");
  }
  for (int p : piv.indices) {
    if (p == n) {
      throw std::invalid_argument("lambda_coefficients: index is a pivot");
    }
  }
  // Pivots preceding n.
  std::size_t i = 0;
  while (i < piv.indices.size() && piv.indices[i] < n) ++i;
  if (i == 0) return {};

  Mat p(i, i);
  Vec c(i);
  for (std::size_t k = 0; k < i; ++k) {
    c(k) = b(n - 1, piv.indices[k] - 1);
    for (std::size_t l = 0; l < i; ++l) {
      p(k, l) = b(piv.indices[k] - 1, piv.indices[l] - 1);
    }
  }
  // Row system lambda * P = c, i.e. P^T lambda^T = c^T; P^T is again
  // Hermitian positive definite (pivot block).
  Mat pt = p.transpose();
  Eigen::LLT<Mat> llt(pt);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("lambda_coefficients: pivot block is not positive definite");
  }
  Vec lambda = llt.solve(c);
  return {lambda.data(), lambda.data() + lambda.size()};
}

Mat eta_basis(const Mat& b, const PivotSequence& piv) {
  const auto k = static_cast<Eigen::Index>(piv.rank());
  Mat p(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      p(r, c) = b(piv.indices[r] - 1, piv.indices[c] - 1);
    }
  }
  Eigen::LLT<Mat> llt(p);
  if (k > 0 && llt.info() != Eigen::Success) {
    throw std::invalid_argument("eta_basis: pivot block is not positive definite");
  }
  // With P = LL*, the rows of L^{-1} B-orthonormalize the pivot directions.
  Mat alpha = llt.matrixL().solve(Mat::Identity(k, k));
  Mat eta = Mat::Zero(k, b.rows());
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c <= r; ++c) {
      eta(r, piv.indices[c] - 1) = alpha(r, c);
    }
  }
  return eta;
}

CholeskyFactor cholesky_psd(const Mat& b, const Tolerances& tol) {
  require_hermitian_psd(b, tol, "cholesky_psd");
  const Eigen::Index m = b.rows();
  const double threshold = tol.eps_rank * max_diagonal(b);

  CholeskyFactor f;
  f.v = Mat::Zero(m, m);
  std::vector<Eigen::Index> pivots;  // 0-based
  double delta = 1.0;

  for (Eigen::Index n = 0; n < m; ++n) {
    const auto k = static_cast<Eigen::Index>(pivots.size());
    // Row of expansion coefficients over the pivots found so far, by forward
    // substitution against the pivot rows of V.
    double diag = b(n, n).real();
    for (Eigen::Index j = 0; j < k; ++j) {
      Complex s = b(n, pivots[j]);
      for (Eigen::Index l = 0; l < j; ++l) {
        s -= f.v(n, l) * std::conj(f.v(pivots[j], l));
      }
      f.v(n, j) = s / f.v(pivots[j], j);
      diag -= std::norm(f.v(n, j));
    }
    // diag is the Schur-complement diagonal Delta_{k+1}/Delta_k for the
    // candidate pivot n.
    if (diag > threshold) {
      f.v(n, k) = std::sqrt(diag);
      pivots.push_back(n);
      delta *= diag;
      f.pivots.deltas.push_back(delta);
    }
  }

  f.rank = static_cast<int>(pivots.size());
  f.pivots.indices.reserve(pivots.size());
  for (Eigen::Index p : pivots) {
    f.pivots.indices.push_back(static_cast<int>(p) + 1);
  }
  return f;
}

}  // namespace framekz
