#pragma once

// ============================================================================
// The 13-dimensional weak Hopf *-algebra M_2 (+) M_3 carrying the golden-
// ratio fusion rules, together with its canonical pairing with the dual and
// the two 5-dimensional module structures (physical and bond) used by the
// matrix-product constructions.
//
// Basis elements are matrix units e_{p,ij} of the two full matrix blocks
// (p = 1 of size 2, p = 2 of size 3), enumerated block-major, row-major.
// ============================================================================

#include "wharf/wha.hpp"

#include <array>

namespace wharf {

/// Total basis size of the two-block algebra.
inline constexpr int kFibDim = 13;

/// The structure constant zeta = sqrt((sqrt(5) - 1) / 2); zeta^2 = 1/phi.
double fib_zeta();

/// Golden ratio (1 + sqrt(5)) / 2.
double golden_ratio();

/// Flat basis index of the matrix unit e_{p,ij} (p in {1,2}, 1-based i, j).
int fib_index(int p, int i, int j);

/// (p, i, j) triples in basis order.
const std::vector<std::array<int, 3>>& fib_labels();

/// The verified table: all axiom residuals sit at rounding level.
WeakHopfAlgebraTable build_fib_wha();

/// Variant retaining the four flagged coproduct entries that fail
/// verification; kept as a negative control for the axiom checker.
WeakHopfAlgebraTable build_fib_wha_flagged();

/// Variant with an alternate middle term in the coproduct of e_{2,23};
/// `middle` is the flat basis index of its second tensor factor.  The
/// verified table uses fib_index(1,1,2).
WeakHopfAlgebraTable build_fib_wha_middle(int middle);

/// Pairing matrices between the algebra basis and the dual matrix-unit
/// basis: row x, column a holds <e_x, et_a> (r_tilde) and the inverse
/// change of basis (r).  r_tilde * r == identity.
struct FibPairing {
  Mat r_tilde;
  Mat r;
};

FibPairing build_fib_pairing();

/// Physical 5-dimensional module of the algebra: e_{p,ij} acts as the
/// matrix unit |p,i><p,j| (block p = 1 occupies rows 0..1, block p = 2 rows
/// 2..4).
Representation build_phi(const WeakHopfAlgebraTable& fib);

/// Bond 5-dimensional module of the dual algebra, obtained from the
/// matrix-unit layout through the pairing change of basis.
Representation build_psi(const WeakHopfAlgebraTable& fib_dual,
                         const FibPairing& pairing);

}  // namespace wharf
