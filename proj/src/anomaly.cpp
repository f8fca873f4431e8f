#include "wharf/anomaly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

#include "wharf/errors.hpp"
#include "wharf/numerics.hpp"

namespace wharf {

// ==== quantum-dimension integrality =========================================

AnomalyVerdict integrality_verdict(const FusionRingData& ring, double tol) {
  AnomalyVerdict v;
  v.tol = tol;
  v.dims = fp_dimensions(ring);
  for (const double d : v.dims) {
    const double dev = std::abs(d - std::round(d));
    v.deviation.push_back(dev);
    if (dev > tol) v.anomalous = true;
  }
  return v;
}

// ==== eigenvalue sequence analysis ==========================================

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Numerical rank of the half-size Hankel matrix H[i][j] = F[i+j].
int hankel_rank(const std::vector<cxd>& f, double rank_tol) {
  const int m = static_cast<int>(f.size()) / 2;
  Mat h(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) h(i, j) = f[static_cast<std::size_t>(i) + j];
  }
  Eigen::BDCSVD<Mat> svd(h);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rank_tol * scale) ++rank;
  }
  return rank;
}

/// Best fraction p/q with 1 <= q <= max_den approximating x in [0, 1);
/// distinct admissible fractions are separated by at least 1/max_den^2, so a
/// linear scan over denominators is exact at the tolerances involved.
struct BestFraction {
  long p = 0;
  long q = 1;
  double err = 0.0;
};

BestFraction best_fraction(double x, long max_den) {
  BestFraction best;
  best.err = std::abs(x);
  for (long q = 1; q <= max_den; ++q) {
    const long p = std::lround(x * static_cast<double>(q));
    const double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
    if (err < best.err) {
      best = {p, q, err};
    }
  }
  const long g = std::gcd(((best.p % best.q) + best.q) % best.q, best.q);
  best.p = (((best.p % best.q) + best.q) % best.q) / g;
  best.q = best.q / g;
  return best;
}

}  // namespace

SequenceRecurrence analyze_sequence(const std::vector<cxd>& values,
                                    int max_order, double tol) {
  const int n = static_cast<int>(values.size());
  if (n < 4) {
    throw std::invalid_argument(
        "analyze_sequence: at least four samples are required");
  }
  if (max_order < 1) {
    throw std::invalid_argument("analyze_sequence: max_order must be >= 1");
  }
  double scale = 1.0;
  for (const cxd& v : values) scale = std::max(scale, std::abs(v));

  SequenceRecurrence out;
  out.order = hankel_rank(values, 1e-8);
  if (out.order == 0) {
    out.finite_image = true;
    out.period = 1;
    return out;
  }
  if (out.order > max_order) {
    std::ostringstream msg;
    msg << "analyze_sequence: no linear recurrence of order <= " << max_order
        << " fits the samples (detected order " << out.order << ")";
    throw UnsupportedError(msg.str());
  }

  // Least-squares minimal recurrence F[k+r] = sum_i c_i F[k+i].
  const int r = out.order;
  const int rows = n - r;
  Mat a(rows, r);
  Vec b(rows);
  for (int k = 0; k < rows; ++k) {
    for (int i = 0; i < r; ++i) a(k, i) = values[static_cast<std::size_t>(k) + i];
    b(k) = values[static_cast<std::size_t>(k) + r];
  }
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec c = svd.solve(b);
  out.coefficients.assign(c.data(), c.data() + c.size());
  out.fit_residual = (a * c - b).cwiseAbs().maxCoeff();

  // Characteristic roots via the companion matrix.
  Mat comp = Mat::Zero(r, r);
  for (int i = 1; i < r; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < r; ++i) comp(i, r - 1) = c(i);
  out.roots = eig_spectrum(comp).eigenvalues;

  if (out.fit_residual > 1e-6 * scale) {
    out.reason = "no exact linear recurrence at this order";
    return out;
  }
  for (const cxd& z : out.roots) {
    if (std::abs(std::abs(z) - 1.0) > tol) {
      out.reason = "characteristic root off the unit circle";
      return out;
    }
  }

  // Rational angles with denominator at most the sample count.
  long period = 1;
  for (const cxd& z : out.roots) {
    double x = std::arg(z) / kTwoPi;
    x -= std::floor(x);  // into [0, 1)
    const BestFraction fr = best_fraction(x, n);
    if (fr.err > 1e-6) {
      out.reason = "irrational rotation angle";
      return out;
    }
    period = std::lcm(period, fr.q);
  }

  // The claimed period must hold on every available sample pair.
  for (int i = 0; i + period < n; ++i) {
    if (std::abs(values[static_cast<std::size_t>(i) + period] - values[i]) >
        1e-6 * scale) {
      out.reason = "period did not verify on the samples";
      return out;
    }
  }
  out.finite_image = true;
  out.period = period;
  return out;
}

double period_sample_integrality(const std::vector<cxd>& values, long period) {
  if (period < 1) {
    throw std::invalid_argument(
        "period_sample_integrality: period must be >= 1");
  }
  double worst = 0.0;
  for (std::size_t idx = static_cast<std::size_t>(period) - 1;
       idx < values.size(); idx += static_cast<std::size_t>(period)) {
    const double nearest = std::max(0.0, std::round(values[idx].real()));
    worst = std::max(worst, std::abs(values[idx] - cxd{nearest}));
  }
  return worst;
}

// ==== root-of-unity corpora =================================================

std::vector<std::pair<int, int>> unit_root_pool(int max_den) {
  if (max_den < 1) {
    throw std::invalid_argument("unit_root_pool: max_den must be >= 1");
  }
  std::vector<std::pair<int, int>> pool;
  for (int q = 1; q <= max_den; ++q) {
    for (int p = 0; p < q; ++p) {
      if (std::gcd(p, q) == 1) pool.emplace_back(p, q);
    }
  }
  return pool;
}

std::vector<cxd> power_sum_samples(
    const std::vector<std::pair<int, int>>& roots, int count) {
  std::vector<cxd> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int ell = 1; ell <= count; ++ell) {
    cxd sum{0.0};
    for (const auto& [p, q] : roots) {
      sum += std::polar(1.0, kTwoPi * static_cast<double>(p) *
                                 static_cast<double>(ell) /
                                 static_cast<double>(q));
    }
    out.push_back(sum);
  }
  return out;
}

long expected_period(const std::vector<std::pair<int, int>>& roots) {
  std::vector<std::pair<int, int>> distinct = roots;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  long period = 1;
  for (const auto& [p, q] : distinct) period = std::lcm(period, static_cast<long>(q));
  return period;
}

}  // namespace wharf
