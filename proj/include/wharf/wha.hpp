#pragma once

// ============================================================================
// Finite-dimensional weak Hopf *-algebra tables and their verification.
//
// A table stores the structure constants of a weak Hopf *-algebra over a
// fixed basis {e_x}:
//   mult    L[x,y,z]: coefficient of e_z in e_x . e_y
//   comult  G[z,x,y]: coefficient of e_x (x) e_y in Delta(e_z)
//   unit    u[x]    : coordinates of 1
//   counit  eps[x]  : eps(e_x)
//   antipode S[z,x] : column x holds the coordinates of S(e_x)
//   star     T[z,x] : column x holds the coordinates of (e_x)^*; the star
//                     operation acts antilinearly on coordinates.
//
// verify_axioms evaluates every defining identity (associativity, unit,
// coassociativity, counit, multiplicativity of the coproduct, the weakened
// unit/counit compatibilities, the three antipode identities, star as an
// antilinear involutive antihomomorphism compatible with the coproduct, and
// positivity of the canonical regular-trace Gram form) and reports one
// residual per identity.
// ============================================================================

#include "wharf/numerics.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wharf {

// ==== table =================================================================

struct WeakHopfAlgebraTable {
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<cxd> mult;    ///< flat [x*dim*dim + y*dim + z]
  std::vector<cxd> comult;  ///< flat [z*dim*dim + x*dim + y]
  Vec unit;
  Vec counit;
  Mat antipode;
  Mat star;
  std::string name;

  /// Allocates zeroed tables of dimension n with default labels "b0", ...
  void init(int n);

  cxd lam(int x, int y, int z) const {
    return mult[(static_cast<std::size_t>(x) * dim + y) * dim + z];
  }
  cxd& lam_ref(int x, int y, int z) {
    return mult[(static_cast<std::size_t>(x) * dim + y) * dim + z];
  }
  cxd gam(int z, int x, int y) const {
    return comult[(static_cast<std::size_t>(z) * dim + x) * dim + y];
  }
  cxd& gam_ref(int z, int x, int y) {
    return comult[(static_cast<std::size_t>(z) * dim + x) * dim + y];
  }

  /// Throws std::invalid_argument when any stored shape disagrees with dim or
  /// any entry is non-finite.
  void validate_shapes() const;
};

// ==== axiom verification ====================================================

/// One residual per defining identity, in a fixed order suitable for
/// reporting.  `star_gram_min_eig` is the smallest eigenvalue of the
/// (hermitized) regular-trace Gram form; positivity is required in addition
/// to the residual bounds.
struct AxiomReport {
  std::vector<std::pair<std::string, double>> residuals;
  double star_gram_min_eig = 0.0;

  double max_residual() const;
  double get(const std::string& axiom_name) const;
  bool pass(double tol) const;
};

/// Evaluates every axiom residual for the table.
AxiomReport verify_axioms(const WeakHopfAlgebraTable& alg,
                          double tol = 1e-10);

/// Coordinates of (e_x . e_y) extended bilinearly: multiply coordinate
/// vectors a and b in the algebra.
Vec multiply(const WeakHopfAlgebraTable& alg, const Vec& a, const Vec& b);

/// Rank-n coefficient tensor of the iterated coproduct Delta^(n-1)(v) in the
/// basis {e_{x1} (x) ... (x) e_{xn}}.  n >= 1; n = 1 returns v itself.
/// Throws std::invalid_argument when dim^n exceeds the dense entry cap.
Tensor comultiply(const WeakHopfAlgebraTable& alg, const Vec& v, int n);

/// Canonical trace of the left regular representation: phi[x] = tr rho(e_x).
Vec regular_trace(const WeakHopfAlgebraTable& alg);

/// Gram form of the star structure against the regular trace,
/// gram[x,b] = sum_{a,z} conj-column-star T[a,x] L[a,b,z] phi[z].
Mat star_gram(const WeakHopfAlgebraTable& alg);

/// Dual table on the dual basis: multiplication and comultiplication swap
/// (with the index transpositions fixed by the pairing), unit and counit
/// swap, the antipode transposes, and the star becomes S^T conj(T)^T.
/// Throws std::invalid_argument when the antipode is singular.
WeakHopfAlgebraTable dual(const WeakHopfAlgebraTable& alg);

// ==== representations =======================================================

/// A finite-dimensional module given by one matrix per basis element.
/// Diagnostics are computed on construction via make_representation.
struct Representation {
  const WeakHopfAlgebraTable* algebra = nullptr;
  int dim = 0;
  std::vector<Mat> mats;

  double hom_residual = 0.0;    ///< worst |rho(e_x e_y) - rho(e_x)rho(e_y)|
  double star_residual = 0.0;   ///< worst |rho(e_x^*) - rho(e_x)^dagger|
  double unit_residual = 0.0;   ///< |rho(1) - I|
  bool is_star = false;
  bool is_unital = false;
  bool is_faithful = false;

  /// rho(v) for a coordinate vector v.
  Mat act(const Vec& v) const;
};

/// Wraps matrices as a representation and computes the diagnostic residuals.
/// Throws std::invalid_argument when the matrix count or shapes disagree
/// with the algebra, or when the homomorphism residual exceeds `hom_tol`.
Representation make_representation(const WeakHopfAlgebraTable& alg,
                                   std::vector<Mat> mats,
                                   double hom_tol = 1e-8);

/// Tensor-product module through the coproduct:
/// (r1 x r2)(e_x) = sum_{u,v} G[x,u,v] r1(e_u) (x) r2(e_v).
/// The result lives on the full tensor-product space and is generally
/// non-unital (rho(1) is a projector).
Representation monoidal_product(const Representation& r1,
                                const Representation& r2,
                                std::size_t entry_cap = kDenseEntryCap);

/// One isotypic component found by decompose.
struct IrrepBlock {
  int irrep_id = 0;      ///< index into the candidate list
  int multiplicity = 0;
  Mat isometry;          ///< D x (multiplicity * irrep_dim), orthonormal cols
};

struct IrrepDecomposition {
  std::vector<IrrepBlock> blocks;
  double residual = 0.0;  ///< worst reconstruction residual over the basis
};

/// Decomposes `rep` against a list of pairwise inequivalent irreducible
/// star-representations.  Multiplicities are the dimensions of the
/// intertwiner solution spaces (singular values below `svd_tol` relative to
/// the largest).  Throws std::runtime_error (carrying the residual) when the
/// candidate list fails to reconstruct the representation within `tol`.
IrrepDecomposition decompose(const Representation& rep,
                             const std::vector<Representation>& irreps,
                             double tol = 1e-8, double svd_tol = 1e-8);

}  // namespace wharf
