#include "wharf/numerics.hpp"

#include <cmath>
#include <limits>

namespace wharf {

// ==== small helpers =========================================================

void require_finite(const Mat& m, const std::string& what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(what + ": non-finite entry");
  }
}

double max_abs(const Mat& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double frob_residual(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frob_residual: shape mismatch (" +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
  return (a - b).norm();
}

Mat matrix_power(const Mat& m, long power) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix_power: matrix must be square");
  }
  if (power < 0) {
    throw std::invalid_argument("matrix_power: negative power");
  }
  Mat result = Mat::Identity(m.rows(), m.cols());
  Mat base = m;
  long e = power;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ==== kron ==================================================================

Mat kron(const Mat& a, const Mat& b, std::size_t entry_cap) {
  const std::size_t rows =
      static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
  const std::size_t cols =
      static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
  if (rows == 0 || cols == 0 || rows > entry_cap / (cols == 0 ? 1 : cols)) {
    throw std::invalid_argument(
        "kron: result size " + std::to_string(rows) + "x" +
        std::to_string(cols) + " exceeds the dense entry cap");
  }
  Mat out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// ==== eigendecomposition ====================================================

SpectrumReport eig_spectrum(const Mat& m, double /*tol*/) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eig_spectrum: matrix must be square");
  }
  if (m.rows() > kEigDimCap) {
    throw std::invalid_argument("eig_spectrum: dimension " +
                                std::to_string(m.rows()) +
                                " exceeds the eigensolver cap");
  }
  require_finite(m, "eig_spectrum");
  SpectrumReport report;
  if (m.rows() == 0) return report;
  Eigen::ComplexEigenSolver<Mat> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_spectrum: QR iteration did not converge");
  }
  const Mat& vecs = solver.eigenvectors();
  const Vec& vals = solver.eigenvalues();
  report.eigenvalues.assign(vals.data(), vals.data() + vals.size());
  double worst = 0.0;
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    const Vec v = vecs.col(k);
    const double nrm = v.norm();
    if (nrm > 0) {
      const double r = ((m * v - vals(k) * v) / nrm).cwiseAbs().maxCoeff();
      worst = std::max(worst, r);
    }
  }
  report.residual = worst;
  return report;
}

std::vector<double> hermitian_spectrum(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_spectrum: matrix must be square");
  }
  if (m.rows() > kEigDimCap) {
    throw std::invalid_argument("hermitian_spectrum: dimension exceeds cap");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_spectrum: eigensolver failed");
  }
  const auto& w = solver.eigenvalues();
  return std::vector<double>(w.data(), w.data() + w.size());
}

double min_hermitian_eig(const Mat& m) {
  const auto w = hermitian_spectrum(m);
  return w.empty() ? 0.0 : w.front();
}

// ==== partial trace =========================================================

Mat partial_trace(const Mat& m, const std::vector<int>& site_dims, int site) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("partial_trace: matrix must be square");
  }
  std::size_t total = 1;
  for (int d : site_dims) {
    if (d <= 0) throw std::invalid_argument("partial_trace: bad site dim");
    total *= static_cast<std::size_t>(d);
  }
  if (total != static_cast<std::size_t>(m.rows())) {
    throw std::invalid_argument(
        "partial_trace: site dims are inconsistent with the matrix size");
  }
  if (site < 0 || site >= static_cast<int>(site_dims.size())) {
    throw std::invalid_argument("partial_trace: site index out of range");
  }
  std::size_t before = 1, after = 1;
  for (int t = 0; t < site; ++t) before *= site_dims[t];
  for (int t = site + 1; t < static_cast<int>(site_dims.size()); ++t) {
    after *= site_dims[t];
  }
  const std::size_t ds = static_cast<std::size_t>(site_dims[site]);
  const std::size_t out_dim = before * after;
  Mat out = Mat::Zero(out_dim, out_dim);
  for (std::size_t b = 0; b < before; ++b) {
    for (std::size_t bp = 0; bp < before; ++bp) {
      for (std::size_t a = 0; a < after; ++a) {
        for (std::size_t ap = 0; ap < after; ++ap) {
          cxd acc = 0.0;
          for (std::size_t i = 0; i < ds; ++i) {
            acc += m((b * ds + i) * after + a, (bp * ds + i) * after + ap);
          }
          out(b * after + a, bp * after + ap) = acc;
        }
      }
    }
  }
  return out;
}

// ==== dense tensor ==========================================================

Tensor::Tensor(std::vector<int> dims, std::size_t entry_cap)
    : dims_(std::move(dims)) {
  std::size_t total = 1;
  for (int d : dims_) {
    if (d <= 0) throw std::invalid_argument("Tensor: non-positive extent");
    if (total > entry_cap / static_cast<std::size_t>(d)) {
      throw std::invalid_argument("Tensor: size exceeds the dense entry cap");
    }
    total *= static_cast<std::size_t>(d);
  }
  strides_.assign(dims_.size(), 1);
  for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k) {
    strides_[k] = strides_[k + 1] * static_cast<std::size_t>(dims_[k + 1]);
  }
  data_.assign(total, cxd{0.0, 0.0});
}

std::size_t Tensor::flat_index(const std::vector<int>& idx) const {
  if (idx.size() != dims_.size()) {
    throw std::invalid_argument("Tensor: rank mismatch in index");
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= dims_[k]) {
      throw std::invalid_argument("Tensor: index out of range");
    }
    flat += strides_[k] * static_cast<std::size_t>(idx[k]);
  }
  return flat;
}

double Tensor::max_abs() const {
  double worst = 0.0;
  for (const cxd& v : data_) worst = std::max(worst, std::abs(v));
  return worst;
}

// ==== extended-precision kernel =============================================

LdSquare LdSquare::identity(int n) {
  LdSquare out(n);
  for (int i = 0; i < n; ++i) out.at(i, i) = cxl{1.0L, 0.0L};
  return out;
}

LdSquare LdSquare::from(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("LdSquare: matrix must be square");
  }
  LdSquare out(static_cast<int>(m.rows()));
  for (int i = 0; i < out.n_; ++i) {
    for (int j = 0; j < out.n_; ++j) {
      out.at(i, j) = cxl{m(i, j).real(), m(i, j).imag()};
    }
  }
  return out;
}

LdSquare LdSquare::mul(const LdSquare& o) const {
  if (n_ != o.n_) throw std::invalid_argument("LdSquare::mul: size mismatch");
  LdSquare out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const cxl aik = at(i, k);
      if (aik == cxl{0.0L, 0.0L}) continue;
      for (int j = 0; j < n_; ++j) {
        out.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return out;
}

LdSquare LdSquare::pow(long power) const {
  if (power < 0) throw std::invalid_argument("LdSquare::pow: negative power");
  LdSquare result = identity(n_);
  LdSquare base = *this;
  long e = power;
  while (e > 0) {
    if (e & 1) result = result.mul(base);
    e >>= 1;
    if (e > 0) base = base.mul(base);
  }
  return result;
}

cxl LdSquare::trace_prod(const LdSquare& o) const {
  if (n_ != o.n_) {
    throw std::invalid_argument("LdSquare::trace_prod: size mismatch");
  }
  cxl acc{0.0L, 0.0L};
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      acc += at(i, k) * o.at(k, i);
    }
  }
  return acc;
}

cxl LdSquare::trace() const {
  cxl acc{0.0L, 0.0L};
  for (int i = 0; i < n_; ++i) acc += at(i, i);
  return acc;
}

Mat LdSquare::to_mat() const {
  Mat out(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      out(i, j) = cxd{static_cast<double>(at(i, j).real()),
                      static_cast<double>(at(i, j).imag())};
    }
  }
  return out;
}

}  // namespace wharf
