#pragma once

// ============================================================================
// Anomaly diagnostics.
//
// Two computable criteria are implemented.  Frobenius-Perron integrality:
// a label whose quantum dimension is not a nonnegative integer obstructs an
// on-site (tensor-product) realization of the symmetry.  Eigenvalue
// periodicity: a finite image of a length-indexed eigenvalue sequence forces
// every characteristic root onto a root of unity; the analyzer recovers the
// minimal recurrence from samples, certifies the roots, and reports the
// minimal period or the reason no finite image is certified.
// ============================================================================

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wharf/fusion_ring.hpp"

namespace wharf {

// ==== quantum-dimension integrality =========================================

/// Integrality report of the Frobenius-Perron dimensions of a fusion ring.
struct AnomalyVerdict {
  std::vector<double> dims;       ///< per label
  std::vector<double> deviation;  ///< per label, distance to nearest integer
  bool anomalous = false;         ///< true when some deviation exceeds tol
  double tol = 0.0;
};

AnomalyVerdict integrality_verdict(const FusionRingData& ring,
                                   double tol = 1e-6);

// ==== eigenvalue sequence analysis ==========================================

/// Minimal linear recurrence of a sampled sequence and the periodicity
/// verdict of its characteristic roots.
struct SequenceRecurrence {
  int order = 0;
  std::vector<cxd> coefficients;  ///< F[k+r] = sum_i coefficients[i] F[k+i]
  std::vector<cxd> roots;         ///< characteristic roots
  double fit_residual = 0.0;      ///< worst recurrence violation on samples
  bool finite_image = false;
  std::optional<long> period;     ///< minimal period when certified
  std::string reason;             ///< diagnosis when no period is certified
};

/// Analyzes samples F(1..K).  The recurrence order is the numerical rank of
/// the half-size Hankel matrix; when it exceeds `max_order` an
/// std::runtime_error (order exceeded) is thrown.  Roots come from the
/// companion matrix of the least-squares recurrence; the image is certified
/// finite when every root lies on the unit circle (within `tol`) at a
/// rational angle with denominator at most K, and the resulting period
/// verifies on all available sample pairs.  Throws std::invalid_argument for
/// fewer than four samples.
SequenceRecurrence analyze_sequence(const std::vector<cxd>& values,
                                    int max_order, double tol = 1e-7);

/// Worst deviation from the nearest nonnegative integer among the samples
/// at positions L = period, 2 period, ... (values are F(1..K)).
double period_sample_integrality(const std::vector<cxd>& values, long period);

// ==== root-of-unity corpora =================================================

/// All reduced angle fractions p/q (0 <= p < q <= max_den): the roots of
/// unity exp(2 pi i p/q) with denominator at most max_den.
std::vector<std::pair<int, int>> unit_root_pool(int max_den);

/// Power-sum samples F(L) = sum_j exp(2 pi i p_j/q_j L) for L = 1..count.
std::vector<cxd> power_sum_samples(
    const std::vector<std::pair<int, int>>& roots, int count);

/// Minimal period of the power-sum sequence: lcm of the denominators of the
/// distinct fractions.
long expected_period(const std::vector<std::pair<int, int>>& roots);

}  // namespace wharf
