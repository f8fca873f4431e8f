#pragma once

// ============================================================================
// Renormalization fixed-point density operators.  Closing the symmetry
// tensor with a sector boundary yields a projector MPO; dressing it with the
// product of local weights gives a translation-invariant density matrix
// whose diagnostics (normalization, hermiticity, positivity, projector and
// commutation residuals), strong-symmetry eigenvalues, reduced states,
// purifications, and dressed transfer spectra are computed here.
// ============================================================================

#include <vector>

#include "wharf/mpo.hpp"

namespace wharf {

// ==== fixed-point states ====================================================

/// Product of single-site weights Omega^{(x) len}.
Mat weight_power(const SymmetrySetup& s, int len,
                 std::size_t entry_cap = kDenseEntryCap);

/// Diagnostics of the sector fixed-point at one length.
struct RfpDiagnostics {
  int sector = 0;
  int len = 0;
  cxd n_m{};                 ///< normalization tr[O(Pi_m) Omega^{(x) len}]
  double n_m_expected = 0.0; ///< 1 / D_m^2
  double trace_dev = 0.0;    ///< |tr rho - 1|
  double herm = 0.0;         ///< max |rho - rho^dagger|
  double idem = 0.0;         ///< max |O(Pi)^2 - O(Pi)|
  double comm = 0.0;         ///< max |[O(Pi), Omega^{(x) len}]|
  double min_eig = 0.0;      ///< smallest eigenvalue of the hermitized rho
  Mat o_pi;                  ///< dense sector projector MPO
  Mat rho;                   ///< normalized density matrix

  /// Largest residual among the scalar diagnostics (positivity enters as
  /// max(0, -min_eig)).
  double max_residual() const;
};

/// Builds the dense sector state rho = O(Pi_m) Omega^{(x) len} / N_m and its
/// diagnostics.  Throws std::invalid_argument for an out-of-range sector or
/// len < 1.
RfpDiagnostics build_rfp(const SymmetrySetup& s, int sector, int len,
                         std::size_t entry_cap = kDenseEntryCap);

/// Strong-symmetry eigenvalue per label,
/// lambda_a = tr(rho^dagger O_a rho) / tr(rho^dagger rho); for a sector
/// fixed point these equal the ring characters chi_m(a).
std::vector<cxd> strong_symmetry_spectrum(const SymmetrySetup& s,
                                          const Mat& rho, int len,
                                          std::size_t entry_cap = kDenseEntryCap);

// ==== reduced states ========================================================

/// Compares the one-site partial trace of the length-`len` sector state
/// against length-(len-1) closures: the boundary dressed with the transfer
/// element reproduces it, the undressed boundary does not.
struct TraceOutReport {
  std::vector<double> corrected;  ///< per sector, dressed-boundary residual
  std::vector<double> naive;      ///< per sector, undressed-boundary residual
  double cross_sector = 0.0;      ///< max distance between sector reductions
};

TraceOutReport check_trace_out(const SymmetrySetup& s, int len = 3,
                               std::size_t entry_cap = kDenseEntryCap);

// ==== purification ==========================================================

/// Purification M = O(Pi_m) sqrt(Omega)^{(x) len} / sqrt(N_m): reconstructs
/// rho as M M^dagger, is an exact eigenstate of every O_a (x) 1, and equals
/// the uniform matrix product state with weight-dressed site tensors.
struct PurificationReport {
  double reconstruction = 0.0;     ///< max |M M^dagger - rho|
  std::vector<double> cs_defect;   ///< per label, Cauchy-Schwarz defect
  std::vector<cxd> lambda;         ///< per label, eigenvalue estimate
  double mps_match = 0.0;          ///< max |mps state - vec(M)|
};

PurificationReport check_purification(const SymmetrySetup& s, int sector,
                                      int len = 2,
                                      std::size_t entry_cap = kDenseEntryCap);

// ==== dressed transfer spectra ==============================================

/// Single-label site tensor with the ket leg dressed by sqrt(Omega):
/// C^{ij} = B^{ij}|_label sqrt(omega_j).
MpoTensor dressed_tensor(const SymmetrySetup& s, int label);

/// Spectrum of the mixed dressed transfer matrix E_ab against the predicted
/// multiset: N_ab^c copies of spec(Psi_c(theta)) padded with zeros.  The
/// eigenvalue-one multiplicity must equal N_ab^unit.
struct ChannelSpectrumReport {
  double multiset_dev = 0.0;
  int unit_multiplicity = 0;
  int expected_multiplicity = 0;
};

ChannelSpectrumReport check_channel_spectrum(const SymmetrySetup& s, int a,
                                             int b, double tol = 1e-8);

}  // namespace wharf
