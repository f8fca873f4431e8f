#pragma once

// ============================================================================
// Dense complex linear-algebra substrate: Kronecker products, partial traces,
// eigendecompositions, residual norms, a small dense tensor container, and an
// extended-precision square-matrix kernel used by transfer-matrix sums whose
// cancellation exceeds double precision.
// ============================================================================

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wharf {

using cxd = std::complex<double>;
using cxl = std::complex<long double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// ==== global numeric policy =================================================

/// Default residual tolerance, relative to the input Frobenius scale.
inline constexpr double kDefaultTol = 1e-9;

/// Hard cap on materialized dense objects (total scalar entries).
inline constexpr std::size_t kDenseEntryCap = std::size_t{1} << 24;

/// Largest dimension accepted by the dense eigensolvers.
inline constexpr int kEigDimCap = 4096;

// ==== small helpers =========================================================

/// Throws std::invalid_argument when any entry of `m` is NaN or infinite.
void require_finite(const Mat& m, const std::string& what);

/// Largest entry magnitude (0 for an empty matrix).
double max_abs(const Mat& m);

/// Conjugate transpose.
inline Mat dagger(const Mat& m) { return m.adjoint(); }

/// Frobenius distance ||a - b||_F.  Throws std::invalid_argument on shape
/// mismatch.
double frob_residual(const Mat& a, const Mat& b);

/// Hermitian part (m + m^dagger) / 2.
inline Mat hermitize(const Mat& m) { return 0.5 * (m + m.adjoint()); }

/// m^power for integer power >= 0 via binary powering (square matrices only).
Mat matrix_power(const Mat& m, long power);

// ==== kron ==================================================================

/// Kronecker product a (x) b.  Throws std::invalid_argument when the result
/// would exceed `entry_cap` scalar entries.
Mat kron(const Mat& a, const Mat& b, std::size_t entry_cap = kDenseEntryCap);

// ==== eigendecomposition ====================================================

/// Full eigenvalue multiset plus the worst per-pair residual
/// max_i ||A v_i - lambda_i v_i||_inf over the computed eigenvectors.  For
/// normal matrices the residual is small; for general matrices the
/// eigenvalues come from the numerically triangularized form and the residual
/// is reported as achieved.
struct SpectrumReport {
  std::vector<cxd> eigenvalues;
  double residual = 0.0;
};

/// Dense eigendecomposition.  Throws std::invalid_argument for non-square or
/// oversized (> kEigDimCap) input, std::runtime_error when the QR iteration
/// does not converge.
SpectrumReport eig_spectrum(const Mat& m, double tol = kDefaultTol);

/// Real spectrum of a Hermitian matrix (input is hermitized first), ascending.
std::vector<double> hermitian_spectrum(const Mat& m);

/// Smallest eigenvalue of the hermitized input.
double min_hermitian_eig(const Mat& m);

// ==== partial trace =========================================================

/// Partial trace over one tensor factor.  `m` must be square with dimension
/// equal to the product of `site_dims`; `site` is the 0-based factor to trace
/// out.  Throws std::invalid_argument on inconsistent dimensions.
Mat partial_trace(const Mat& m, const std::vector<int>& site_dims, int site);

// ==== dense tensor ==========================================================

/// Dense row-major complex tensor of arbitrary rank with a global size cap.
class Tensor {
 public:
  Tensor() = default;

  /// Allocates a zero tensor.  Throws std::invalid_argument when any extent
  /// is non-positive or the total size exceeds `entry_cap`.
  explicit Tensor(std::vector<int> dims, std::size_t entry_cap = kDenseEntryCap);

  const std::vector<int>& dims() const { return dims_; }
  int rank() const { return static_cast<int>(dims_.size()); }
  std::size_t size() const { return data_.size(); }

  cxd* data() { return data_.data(); }
  const cxd* data() const { return data_.data(); }

  cxd& operator[](std::size_t flat) { return data_[flat]; }
  const cxd& operator[](std::size_t flat) const { return data_[flat]; }

  /// Row-major flat offset of a multi-index (bounds-checked).
  std::size_t flat_index(const std::vector<int>& idx) const;

  cxd& at(const std::vector<int>& idx) { return data_[flat_index(idx)]; }
  const cxd& at(const std::vector<int>& idx) const {
    return data_[flat_index(idx)];
  }

  /// Largest entry magnitude.
  double max_abs() const;

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<cxd> data_;
};

// ==== extended-precision kernel =============================================

/// Square complex matrix in extended precision.  Only the handful of kernels
/// needed by transfer-matrix evaluations are provided; the naive O(n^3)
/// multiply is adequate at the bond dimensions involved.
class LdSquare {
 public:
  LdSquare() = default;
  explicit LdSquare(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static LdSquare identity(int n);
  static LdSquare from(const Mat& m);

  int n() const { return n_; }
  cxl& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cxl& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  LdSquare mul(const LdSquare& o) const;

  /// this^power for power >= 0 via binary powering.
  LdSquare pow(long power) const;

  /// tr[this * o].
  cxl trace_prod(const LdSquare& o) const;

  cxl trace() const;

  /// Round back to double precision.
  Mat to_mat() const;

 private:
  int n_ = 0;
  std::vector<cxl> a_;
};

}  // namespace wharf
