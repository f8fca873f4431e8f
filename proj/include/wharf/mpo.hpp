#pragma once

// ============================================================================
// Matrix product operators built from a symmetry setup: site tensors, bond
// restrictions, boundary closures, dense assembly, transfer-matrix
// Hilbert-Schmidt inner products (double and extended precision), operator
// products and adjoints, fusion-rule residuals, the coproduct-power
// cross-check route, and matrix-product-state symmetry diagnostics.
//
// Conventions.  A site tensor B holds one bond x bond matrix per physical
// index pair (i, j); the operator of length L with boundary X is
//   O(X) = sum_{i..., j...} tr[X B^{i1 j1} ... B^{iL jL}] |i...><j...| .
// ============================================================================

#include <vector>

#include "wharf/materialize.hpp"
#include "wharf/numerics.hpp"

namespace wharf {

// ==== site tensors ==========================================================

/// One bond x bond matrix per (bra, ket) physical index pair.
struct MpoTensor {
  int phys = 0;
  int bond = 0;
  std::vector<Mat> b;  ///< index i * phys + j

  const Mat& at(int i, int j) const {
    return b[static_cast<std::size_t>(i) * phys + j];
  }
  Mat& at(int i, int j) { return b[static_cast<std::size_t>(i) * phys + j]; }
};

/// Symmetry site tensor B^{ij}(l, r) = sum_x Psi(d_x)(l, r) Phi(e_x)(i, j).
MpoTensor build_symmetry_tensor(const SymmetrySetup& s);

/// Restriction of the symmetry tensor to the bond block of one label.
/// Throws std::invalid_argument for an out-of-range label.
MpoTensor restricted_tensor(const SymmetrySetup& s, int label);

/// Site tensor of the operator product O_p O_q: bond dimensions multiply,
/// C^{ik} = sum_j P^{ij} (x) Q^{jk}.  Throws std::invalid_argument when the
/// physical dimensions disagree.
MpoTensor product_tensor(const MpoTensor& p, const MpoTensor& q);

// ==== boundary closures =====================================================

/// A site tensor together with the bond matrix closing the trace.
struct MpoOperator {
  MpoTensor tensor;
  Mat boundary;
};

/// Closure of the full symmetry tensor with boundary `x`, guarded: `x` must
/// commute with the bond representation (so the operator is a combination of
/// the single-label operators).  Throws std::invalid_argument otherwise.
MpoOperator symmetry_mpo(const SymmetrySetup& s, const Mat& x,
                         double tol = 1e-10);

/// Single-label operator: restricted tensor closed with the block identity.
MpoOperator label_mpo(const SymmetrySetup& s, int label);

/// Adjoint operator: site tensor B'^{ij} = conj(B^{ji}), boundary conj(X).
MpoOperator mpo_dagger(const MpoOperator& op);

/// Operator product: product tensor with boundary kron(X_p, X_q).
MpoOperator product_mpo(const MpoOperator& p, const MpoOperator& q);

// ==== dense assembly ========================================================

/// Dense matrix of the length-`len` operator on the full tensor-product
/// space.  Throws std::invalid_argument when len < 1, when the boundary shape
/// disagrees with the bond dimension, or when the result would exceed
/// `entry_cap` scalar entries.
Mat assemble_dense(const MpoOperator& op, int len,
                   std::size_t entry_cap = kDenseEntryCap);

/// Dense state  sum_i tr[X A^{i1} ... A^{iL}] |i1 ... iL>  of a matrix
/// product state with site vectors A^i.
struct MpsTensor {
  int phys = 0;
  int bond = 0;
  std::vector<Mat> a;  ///< index i, each bond x bond
};

Vec assemble_mps_state(const MpsTensor& t, const Mat& boundary, int len,
                       std::size_t entry_cap = kDenseEntryCap);

// ==== transfer matrices and inner products ==================================

/// Mixed transfer matrix E[(a, c), (b, d)] = sum_{ij} conj(P^{ij}(a, b))
/// Q^{ij}(c, d), as a (bond_P bond_Q)^2 matrix.  Throws
/// std::invalid_argument when the physical dimensions disagree.
Mat transfer_matrix(const MpoTensor& p, const MpoTensor& q);

/// Same contraction accumulated in extended precision.
LdSquare transfer_matrix_ld(const MpoTensor& p, const MpoTensor& q);

/// Hilbert-Schmidt inner product tr[O_p^dagger O_q] at length `len`,
/// evaluated as tr[kron(conj(X_p), X_q) E^len].
cxd hs_inner(const MpoOperator& p, const MpoOperator& q, int len);

/// Extended-precision variant for sums with severe cancellation.
cxl hs_inner_ld(const MpoOperator& p, const MpoOperator& q, int len);

// ==== fusion and cross-checks ===============================================

/// Normalized residual of the fusion rule O_a O_b = sum_c N_ab^c O_c at
/// length `len`:  sqrt(|g - 2 Re s + t| / |g|)  with  g = <O_ab, O_ab>,
/// s = sum_c N <O_ab, O_c>, t = sum_{c,c'} N N' <O_c, O_c'>; the combination
/// is always accumulated in extended precision, and `extended_precision`
/// additionally routes every inner product through the extended kernel.
double fusion_residual(const SymmetrySetup& s, int a, int b, int len,
                       bool extended_precision = false);

/// Relative Frobenius residual of the same rule on dense assemblies,
/// ||O_a O_b - sum_c N O_c|| / ||O_a O_b||.
double fusion_residual_dense(const SymmetrySetup& s, int a, int b, int len);

/// Dense operator through the coproduct-power route,
/// O(X) = sum_x tr[X Psi(d_x)] Phi^{(x) len}(e_x); agrees with
/// assemble_dense of the corresponding boundary closure.
Mat algebra_operator(const SymmetrySetup& s, const Mat& x, int len,
                     std::size_t entry_cap = kDenseEntryCap);

// ==== state symmetry ========================================================

/// Eigenvalue estimate and Cauchy-Schwarz defect of `op` acting on `psi`:
/// the defect 1 - |<psi, O psi>|^2 / (|psi|^2 |O psi|^2) vanishes exactly
/// when psi is an eigenvector of op.
struct SymmetricStateReport {
  cxd lambda{};          ///< <psi, O psi> / <psi, psi>
  double cs_defect = 0;  ///< in [0, 1]
};

SymmetricStateReport check_state_symmetric(const Mat& op, const Vec& psi);

}  // namespace wharf
