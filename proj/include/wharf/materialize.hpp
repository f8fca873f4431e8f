#pragma once

// ============================================================================
// Wedderburn decomposition of a verified weak Hopf *-algebra and assembly of
// the full symmetry setup: a faithful block-diagonal *-representation Phi of
// the algebra on the physical legs, the companion *-representation Psi of the
// dual on the bond legs, block labels matched to a fusion ring, the weight
// matrix Omega built from quantum dimensions, the transfer element theta, and
// the sector boundary projectors.
//
// Pipeline per algebra:
//   center -> primitive central idempotents -> ideal ranks
//   GNS orthonormalization wrt the regular trace -> *-regular representation
//   per-ideal commutant -> one irreducible copy (a *-representation)
//   characters + coproduct -> block fusion multiplicities
//   permutation match against the ring -> block labels.
// ============================================================================

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "wharf/fusion_ring.hpp"
#include "wharf/wha.hpp"

namespace wharf {

// ==== Wedderburn decomposition ==============================================

/// Left regular representation: rho[x](z, y) = L[x, y, z].
std::vector<Mat> regular_representation(const WeakHopfAlgebraTable& alg);

/// Basis of the center as rows of a k x n matrix (coefficient vectors v with
/// e_x . v = v . e_x for all x), from the nullspace of the commutator map.
Mat center_basis(const WeakHopfAlgebraTable& alg, double tol = 1e-10);

/// Primitive central idempotents by spectral splitting of a generic central
/// element.  Retries internally on a degenerate random draw; throws
/// std::runtime_error when closure, idempotency, orthogonality or the
/// sum-to-unit check fails.
std::vector<Vec> central_idempotents(const WeakHopfAlgebraTable& alg,
                                     std::mt19937_64& rng);

/// (W^{1/2}, W^{-1/2}) of the regular-trace Gram form; conjugating the
/// regular representation by them yields a *-representation.  Throws
/// std::runtime_error when the form is not positive definite.
std::pair<Mat, Mat> gns_transform(const WeakHopfAlgebraTable& alg);

/// One matrix block of the Wedderburn decomposition.
struct ExtractedIrrep {
  std::vector<Mat> mats;  ///< one irrep_dim x irrep_dim matrix per basis elem
  int irrep_dim = 0;
  int ideal_rank = 0;     ///< irrep_dim^2
};

/// Extracts one irreducible *-representation per central idempotent from the
/// GNS-orthonormalized regular representation: project onto the ideal, cut a
/// single copy with a commutant eigenspace, then verify the star property,
/// irreducibility (Burnside) and the homomorphism residual.  Throws
/// std::runtime_error on any failed check.
std::vector<ExtractedIrrep> extract_irreps(const WeakHopfAlgebraTable& alg,
                                           const std::vector<Vec>& idempotents,
                                           std::mt19937_64& rng);

/// Block fusion multiplicities N[a,b,c] = multiplicity of block c in
/// (pi_a (x) pi_b) composed with the coproduct, flat index (a*k + b)*k + c.
/// Throws std::runtime_error when the computed numbers are not integral.
std::vector<int> block_fusion(const WeakHopfAlgebraTable& alg,
                              const std::vector<Vec>& idempotents,
                              const std::vector<ExtractedIrrep>& irreps,
                              double tol = 1e-6);

/// Permutation p (block index -> ring label index) with
/// Nblocks[a,b,c] = Nring[p(a), p(b), p(c)].  Throws std::runtime_error when
/// the block fusion does not match the ring.
std::vector<int> match_labels(const std::vector<int>& n_blocks,
                              const FusionRingData& ring);

// ==== assembled symmetry setup ==============================================

/// Everything the matrix-product constructions need, with every block indexed
/// by the fusion-ring labels.
struct SymmetrySetup {
  WeakHopfAlgebraTable alg;
  WeakHopfAlgebraTable dual_alg;
  FusionRingData ring;
  std::vector<double> qdims;  ///< quantum dimension per ring label

  std::vector<Mat> phi;  ///< physical *-rep of the algebra, block per label
  std::vector<Mat> psi;  ///< bond *-rep of the dual, block per label
  std::vector<int> phi_offset, phi_dim;
  std::vector<int> psi_offset, psi_dim;

  Mat omega;       ///< diagonal weight, d_a / D^2 on the phi block of a
  Vec theta;       ///< theta[x] = tr(Omega Phi_x): dual coords of the weights
  Mat characters;  ///< ring character table, Frobenius-Perron row first

  int phys_dim() const { return static_cast<int>(omega.rows()); }
  int bond_dim() const {
    return psi.empty() ? 0 : static_cast<int>(psi[0].rows());
  }

  /// Linear extensions of the representations to coefficient vectors.
  Mat phi_of(const Vec& v) const;
  Mat psi_of(const Vec& v) const;

  /// Projector onto the bond block of label a.
  Mat block_identity(int a) const;

  /// Global quantum dimension squared, D^2 = sum_a d_a^2.
  double total_quantum_dim_sq() const;

  /// Sector dimension squared, D_m^2 = sum_a |chi_m(a)|^2.
  double sector_dim_sq(int m) const;

  /// Sector boundary projector Pi_m = sum_a chi_m(a) P_a / D_m^2 on the bond
  /// space.
  Mat sector_boundary(int m) const;
};

/// The hand-constructed realization for the golden-ratio algebra: matrix-unit
/// physical representation on C^5 and the bond representation transported
/// through the canonical pairing.
SymmetrySetup fib_setup();

/// Wedderburn route for any verified table whose block fusion matches `ring`.
/// One generator seeds the whole pipeline (algebra idempotents, dual
/// idempotents, algebra irreps, dual irreps, in that order), so the result is
/// deterministic for a fixed seed.
SymmetrySetup materialize(const WeakHopfAlgebraTable& alg,
                          const FusionRingData& ring, std::uint64_t seed = 11);

/// Wedderburn route with the ring read off from the algebra's own block
/// fusion (labels "b0", "b1", ...; the unit block first, remaining blocks by
/// ascending quantum dimension).
SymmetrySetup materialize_intrinsic(const WeakHopfAlgebraTable& alg,
                                    std::uint64_t seed = 11);

}  // namespace wharf
