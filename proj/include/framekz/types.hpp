#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace framekz {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using VecList = std::vector<Vec>;

/// Numeric slacks shared by every validation and spectral test.
struct Tolerances {
  double eps_unit = 1e-10;  ///< unit-norm slack
  double eps_herm = 1e-10;  ///< Hermitian symmetry slack
  double eps_rank = 1e-9;   ///< relative pivot / rank threshold
  double eps_eig = 1e-9;    ///< eigenvalue floor for PSD and contraction tests
  double eps_id = 1e-8;     ///< matrix-identity residual slack

  /// Throws std::invalid_argument unless all slacks are positive and
  /// eps_unit <= eps_id.
  void require_valid() const;
};

/// A failed invariant together with its numeric margin.
struct Violation {
  std::string name;
  double margin = 0.0;
};

/// Raised when an input fails a mathematical validity check (as opposed to a
/// structural error such as a dimension mismatch, which raises
/// std::invalid_argument).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<Violation> violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

bool all_finite(const Vec& v) noexcept;
bool all_finite(const Mat& m) noexcept;
void require_finite(const Vec& v, const char* what);
void require_finite(const Mat& m, const char* what);

/// Entrywise max modulus; 0 for an empty matrix.
double max_abs(const Mat& m) noexcept;

}  // namespace framekz
