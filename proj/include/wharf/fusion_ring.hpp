#pragma once

// ============================================================================
// Fusion rings: integer structure constants N_ab^c with dual and unit data,
// Frobenius-Perron dimensions, and the finite character table of the
// commutative fusion algebra.
// ============================================================================

#include <string>
#include <vector>

#include "wharf/numerics.hpp"

namespace wharf {

/// A based ring with nonnegative integer structure constants.
///
/// Labels are indexed 0..rank-1; `n(a,b,c)` is the multiplicity of label c in
/// the product a*b.  `dual[a]` is the label conjugate to a and `unit` is the
/// distinguished identity label.
struct FusionRingData {
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;
  /// Flattened multiplicities, index (a * rank + b) * rank + c.
  std::vector<int> n_flat;
  std::string name;

  int rank() const { return static_cast<int>(labels.size()); }

  int n(int a, int b, int c) const {
    const int r = rank();
    return n_flat[static_cast<std::size_t>((a * r + b)) * r + c];
  }

  int& n_ref(int a, int b, int c) {
    const int r = rank();
    return n_flat[static_cast<std::size_t>((a * r + b)) * r + c];
  }

  /// Allocates `n_flat` with zeros and `dual` as the identity involution.
  void init(std::vector<std::string> basis_labels);
};

/// Validates unit laws, dual involution, Frobenius reciprocity with the unit
/// (N_ab^0 = delta_{b, dual(a)}) and associativity.  Throws InputError on the
/// first violation.
void validate_ring(const FusionRingData& ring);

/// Left-multiplication matrix of label a: entry (c, b) equals N_ab^c.
Mat fusion_matrix(const FusionRingData& ring, int a);

/// Frobenius-Perron dimension of each label: the entries of the unique
/// strictly positive common eigenvector, normalised so the unit has
/// dimension one (equivalently d_a is the largest real eigenvalue of the
/// matrix N_a when the ring is commutative).
std::vector<double> fp_dimensions(const FusionRingData& ring);

/// One row per one-dimensional character chi_m of the fusion algebra;
/// entry (m, a) is chi_m(a).  Characters are obtained by simultaneous
/// diagonalisation of the fusion matrices via a random linear combination,
/// verified against chi(a) chi(b) = sum_c N_ab^c chi(c), and sorted so the
/// Frobenius-Perron character (maximal sum of real parts) comes first.
Mat ring_characters(const FusionRingData& ring, std::uint64_t seed = 7,
                    double tol = 1e-8);

/// The Fibonacci fusion ring: labels {1, tau}, tau * tau = 1 + tau.
FusionRingData fib_ring();

/// The group ring of Z/2: labels {0, 1} with addition mod 2.
FusionRingData z2_ring();

}  // namespace wharf
