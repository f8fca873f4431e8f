#include "wharf/materialize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "wharf/errors.hpp"
#include "wharf/fib.hpp"

namespace wharf {

namespace {

// A fresh distribution per draw keeps results a pure function of the
// engine state (normal_distribution caches a spare variate internally).
double draw_gauss(std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

}  // namespace

// ==== Wedderburn decomposition ==============================================

std::vector<Mat> regular_representation(const WeakHopfAlgebraTable& alg) {
  const int n = alg.dim;
  std::vector<Mat> rho(n, Mat::Zero(n, n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const cxd v = alg.lam(x, y, z);
        if (v != cxd{0.0}) rho[x](z, y) = v;
      }
    }
  }
  return rho;
}

Mat center_basis(const WeakHopfAlgebraTable& alg, double tol) {
  const int n = alg.dim;
  // Rows (x, z), columns y: the commutator map y -> [e_., e_y] coefficients.
  Mat m = Mat::Zero(n * n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        m(x * n + z, y) = alg.lam(x, y, z) - alg.lam(y, x, z);
      }
    }
  }
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  std::vector<int> null_cols;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) < cut) null_cols.push_back(i);
  }
  Mat out(static_cast<int>(null_cols.size()), n);
  for (std::size_t j = 0; j < null_cols.size(); ++j) {
    out.row(static_cast<int>(j)) = svd.matrixV().col(null_cols[j]).transpose();
  }
  return out;
}

std::vector<Vec> central_idempotents(const WeakHopfAlgebraTable& alg,
                                     std::mt19937_64& rng) {
  const int n = alg.dim;
  const Mat c = center_basis(alg);
  const int k = static_cast<int>(c.rows());
  if (k == 0) throw std::runtime_error("center basis is empty");

  for (int attempt = 0; attempt < 8; ++attempt) {
    // Generic central element; its multiplication action on the center has
    // simple spectrum for a generic draw.
    Vec g = Vec::Zero(n);
    for (int j = 0; j < k; ++j) g += draw_gauss(rng) * c.row(j).transpose();
    Mat gc(k, n);  // row j = coordinates of g . c_j
    for (int j = 0; j < k; ++j) {
      gc.row(j) = multiply(alg, g, c.row(j).transpose()).transpose();
    }
    // Coordinates of each product in the center basis: C^T M = gc^T.
    Eigen::BDCSVD<Mat> svd(c.transpose(),
                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Mat m = svd.solve(gc.transpose());
    if ((c.transpose() * m - gc.transpose()).cwiseAbs().maxCoeff() > 1e-8) {
      throw std::runtime_error("center is not closed under multiplication");
    }
    Eigen::ComplexEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("central element eigendecomposition failed");
    }
    double min_gap = 1e300;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j) {
          min_gap = std::min(min_gap,
                             std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)));
        }
      }
    }
    if (k > 1 && min_gap < 1e-6) continue;  // degenerate draw: retry

    std::vector<Vec> ps;
    for (int i = 0; i < k; ++i) {
      const Vec v = c.transpose() * es.eigenvectors().col(i);
      const Vec vv = multiply(alg, v, v);
      const cxd scale = vv.dot(v) / vv.dot(vv);
      const Vec p = scale * v;
      if ((multiply(alg, p, p) - p).cwiseAbs().maxCoeff() > 1e-8) {
        throw std::runtime_error("central idempotent normalization failed");
      }
      ps.push_back(p);
    }
    Vec total = Vec::Zero(n);
    for (const Vec& p : ps) total += p;
    if ((total - alg.unit).cwiseAbs().maxCoeff() > 1e-8) {
      throw std::runtime_error("central idempotents do not sum to the unit");
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (multiply(alg, ps[i], ps[j]).cwiseAbs().maxCoeff() > 1e-8) {
          throw std::runtime_error("central idempotents are not orthogonal");
        }
      }
    }
    return ps;
  }
  throw std::runtime_error(
      "generic central element had persistently degenerate spectrum");
}

std::pair<Mat, Mat> gns_transform(const WeakHopfAlgebraTable& alg) {
  const Mat gram = hermitize(star_gram(alg));
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Gram eigendecomposition failed");
  }
  const auto& w = es.eigenvalues();
  if (w.minCoeff() <= 0.0) {
    std::ostringstream msg;
    msg << "regular-trace Gram form is not positive definite: min eigenvalue "
        << w.minCoeff();
    throw std::runtime_error(msg.str());
  }
  const Mat u = es.eigenvectors();
  const Mat whalf =
      u * w.cwiseSqrt().asDiagonal() * u.adjoint();
  const Mat winv =
      u * w.cwiseSqrt().cwiseInverse().asDiagonal() * u.adjoint();
  return {whalf, winv};
}

std::vector<ExtractedIrrep> extract_irreps(const WeakHopfAlgebraTable& alg,
                                           const std::vector<Vec>& idempotents,
                                           std::mt19937_64& rng) {
  const int n = alg.dim;
  const std::vector<Mat> rho = regular_representation(alg);
  const auto [whalf, winv] = gns_transform(alg);
  std::vector<Mat> rhot(n);
  for (int x = 0; x < n; ++x) rhot[x] = whalf * rho[x] * winv;

  // The orthonormalized regular representation must be a *-representation.
  double star_res = 0.0;
  for (int x = 0; x < n; ++x) {
    Mat lhs = Mat::Zero(n, n);
    for (int y = 0; y < n; ++y) {
      const cxd t = alg.star(y, x);
      if (t != cxd{0.0}) lhs += t * rhot[y];
    }
    star_res = std::max(star_res,
                        (lhs - rhot[x].adjoint()).cwiseAbs().maxCoeff());
  }
  if (star_res > 1e-8) {
    throw std::runtime_error(
        "orthonormalized regular representation is not a *-representation");
  }

  std::vector<ExtractedIrrep> out;
  for (const Vec& p : idempotents) {
    Mat pm = Mat::Zero(n, n);
    for (int x = 0; x < n; ++x) {
      if (p(x) != cxd{0.0}) pm += p(x) * rho[x];
    }
    pm = hermitize(whalf * pm * winv);
    Eigen::SelfAdjointEigenSolver<Mat> es(pm);
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
      if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
    }
    const int r = static_cast<int>(keep.size());
    const int m = static_cast<int>(std::lround(std::sqrt(double(r))));
    if (m * m != r) {
      std::ostringstream msg;
      msg << "ideal rank " << r << " is not a perfect square";
      throw std::runtime_error(msg.str());
    }
    Mat q(n, r);
    for (int i = 0; i < r; ++i) q.col(i) = es.eigenvectors().col(keep[i]);
    std::vector<Mat> rk(n);
    for (int x = 0; x < n; ++x) rk[x] = q.adjoint() * rhot[x] * q;

    // Commutant of the restricted representation.
    Mat a = Mat::Zero(n * r * r, r * r);
    const Mat eye_r = Mat::Identity(r, r);
    for (int x = 0; x < n; ++x) {
      a.block(x * r * r, 0, r * r, r * r) =
          kron(rk[x], eye_r) - kron(eye_r, rk[x].transpose());
    }
    Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cut = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    int ncom = 0;
    for (int i = 0; i < sv.size(); ++i) {
      if (sv(i) < cut) ++ncom;
    }
    if (ncom != m * m) {
      std::ostringstream msg;
      msg << "commutant dimension " << ncom << " != block rank " << m * m;
      throw std::runtime_error(msg.str());
    }
    std::vector<Mat> comm_basis;
    for (int t = 0; t < ncom; ++t) {
      const Vec col = svd.matrixV().col(r * r - ncom + t);
      Mat b(r, r);
      for (int pq = 0; pq < r * r; ++pq) b(pq / r, pq % r) = col(pq);
      comm_basis.push_back(std::move(b));
    }

    // A generic hermitian commutant element has an m-dimensional lowest
    // eigenspace cutting out one irreducible copy.
    Mat vcl;
    bool found = false;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
      Mat x = Mat::Zero(r, r);
      for (int t = 0; t < ncom; ++t) x += draw_gauss(rng) * comm_basis[t];
      x = hermitize(x);
      Eigen::SelfAdjointEigenSolver<Mat> esx(x);
      int cluster = 1;
      while (cluster < r &&
             esx.eigenvalues()(cluster) - esx.eigenvalues()(cluster - 1) <
                 1e-6) {
        ++cluster;
      }
      if (cluster != m) continue;
      vcl = esx.eigenvectors().leftCols(m);
      found = true;
    }
    if (!found) {
      throw std::runtime_error(
          "commutant eigenspace repeatedly had the wrong dimension");
    }

    ExtractedIrrep ir;
    ir.irrep_dim = m;
    ir.ideal_rank = r;
    ir.mats.resize(n);
    for (int x = 0; x < n; ++x) ir.mats[x] = vcl.adjoint() * rk[x] * vcl;

    // Verification: *-representation, irreducibility (Burnside), and the
    // homomorphism property.
    double block_star = 0.0;
    for (int x = 0; x < n; ++x) {
      Mat lhs = Mat::Zero(m, m);
      for (int y = 0; y < n; ++y) {
        const cxd t = alg.star(y, x);
        if (t != cxd{0.0}) lhs += t * ir.mats[y];
      }
      block_star = std::max(
          block_star, (lhs - ir.mats[x].adjoint()).cwiseAbs().maxCoeff());
    }
    if (block_star > 1e-8) {
      throw std::runtime_error("extracted block is not a *-representation");
    }
    Mat flat(n, m * m);
    for (int x = 0; x < n; ++x) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) flat(x, i * m + j) = ir.mats[x](i, j);
      }
    }
    Eigen::BDCSVD<Mat> svf(flat);
    int rank = 0;
    for (int i = 0; i < svf.singularValues().size(); ++i) {
      if (svf.singularValues()(i) > 1e-8) ++rank;
    }
    if (rank != m * m) {
      throw std::runtime_error("extracted block is not irreducible");
    }
    double hom = 0.0;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        Mat rhs = Mat::Zero(m, m);
        for (int z = 0; z < n; ++z) {
          const cxd l = alg.lam(x, y, z);
          if (l != cxd{0.0}) rhs += l * ir.mats[z];
        }
        hom = std::max(hom,
                       (ir.mats[x] * ir.mats[y] - rhs).cwiseAbs().maxCoeff());
      }
    }
    if (hom > 1e-7) {
      std::ostringstream msg;
      msg << "extracted block is not a homomorphism: residual " << hom;
      throw std::runtime_error(msg.str());
    }
    out.push_back(std::move(ir));
  }
  return out;
}

std::vector<int> block_fusion(const WeakHopfAlgebraTable& alg,
                              const std::vector<Vec>& idempotents,
                              const std::vector<ExtractedIrrep>& irreps,
                              double tol) {
  const int n = alg.dim;
  const int k = static_cast<int>(irreps.size());
  std::vector<Vec> chi(k, Vec::Zero(n));
  for (int a = 0; a < k; ++a) {
    for (int x = 0; x < n; ++x) chi[a](x) = irreps[a].mats[x].trace();
  }
  std::vector<int> out(static_cast<std::size_t>(k) * k * k, 0);
  for (int c = 0; c < k; ++c) {
    // t[a][b] = sum_z P_c[z] sum_{x,y} G[z,x,y] chi_a(x) chi_b(y).
    Mat t = Mat::Zero(k, k);
    for (int z = 0; z < n; ++z) {
      const cxd pz = idempotents[c](z);
      if (pz == cxd{0.0}) continue;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const cxd g = alg.gam(z, x, y);
          if (g == cxd{0.0}) continue;
          for (int a = 0; a < k; ++a) {
            if (chi[a](x) == cxd{0.0}) continue;
            for (int b = 0; b < k; ++b) {
              t(a, b) += pz * g * chi[a](x) * chi[b](y);
            }
          }
        }
      }
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        const cxd v = t(a, b) / static_cast<double>(irreps[c].irrep_dim);
        const long r = std::lround(v.real());
        if (std::abs(v - cxd{static_cast<double>(r)}) > tol) {
          std::ostringstream msg;
          msg << "block fusion multiplicity not integral: " << v;
          throw std::runtime_error(msg.str());
        }
        out[static_cast<std::size_t>((a * k + b)) * k + c] =
            static_cast<int>(r);
      }
    }
  }
  return out;
}

std::vector<int> match_labels(const std::vector<int>& n_blocks,
                              const FusionRingData& ring) {
  const int k = ring.rank();
  if (n_blocks.size() != static_cast<std::size_t>(k) * k * k) {
    throw std::runtime_error("block count does not match the ring rank");
  }
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = 0; b < k && ok; ++b) {
        for (int c = 0; c < k && ok; ++c) {
          if (n_blocks[static_cast<std::size_t>((a * k + b)) * k + c] !=
              ring.n(perm[a], perm[b], perm[c])) {
            ok = false;
          }
        }
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::runtime_error(
      "block fusion does not match the given fusion ring");
}

// ==== assembled symmetry setup ==============================================

Mat SymmetrySetup::phi_of(const Vec& v) const {
  Mat out = Mat::Zero(phys_dim(), phys_dim());
  for (int x = 0; x < alg.dim; ++x) {
    if (v(x) != cxd{0.0}) out += v(x) * phi[x];
  }
  return out;
}

Mat SymmetrySetup::psi_of(const Vec& v) const {
  Mat out = Mat::Zero(bond_dim(), bond_dim());
  for (int x = 0; x < alg.dim; ++x) {
    if (v(x) != cxd{0.0}) out += v(x) * psi[x];
  }
  return out;
}

Mat SymmetrySetup::block_identity(int a) const {
  Mat out = Mat::Zero(bond_dim(), bond_dim());
  out.block(psi_offset[a], psi_offset[a], psi_dim[a], psi_dim[a]) =
      Mat::Identity(psi_dim[a], psi_dim[a]);
  return out;
}

double SymmetrySetup::total_quantum_dim_sq() const {
  double s = 0.0;
  for (const double d : qdims) s += d * d;
  return s;
}

double SymmetrySetup::sector_dim_sq(int m) const {
  double s = 0.0;
  for (int a = 0; a < ring.rank(); ++a) s += std::norm(characters(m, a));
  return s;
}

Mat SymmetrySetup::sector_boundary(int m) const {
  Mat out = Mat::Zero(bond_dim(), bond_dim());
  for (int a = 0; a < ring.rank(); ++a) {
    out += characters(m, a) * block_identity(a);
  }
  return out / sector_dim_sq(m);
}

namespace {

/// Shared tail of the setup constructors: weights, transfer element,
/// characters, and representation-level sanity checks.
void finish_setup(SymmetrySetup& s) {
  const int n = s.alg.dim;
  const int da = std::accumulate(s.phi_dim.begin(), s.phi_dim.end(), 0);
  const double d2 = s.total_quantum_dim_sq();
  s.omega = Mat::Zero(da, da);
  for (int a = 0; a < s.ring.rank(); ++a) {
    s.omega.block(s.phi_offset[a], s.phi_offset[a], s.phi_dim[a], s.phi_dim[a]) =
        (s.qdims[a] / d2) * Mat::Identity(s.phi_dim[a], s.phi_dim[a]);
  }
  s.theta = Vec::Zero(n);
  for (int x = 0; x < n; ++x) s.theta(x) = (s.omega * s.phi[x]).trace();
  s.characters = ring_characters(s.ring);

  // Representation-level sanity: Phi is a faithful unital *-representation
  // of the algebra, Psi one of the dual.
  const Representation rp = make_representation(s.alg, s.phi, 1e-8);
  if (!rp.is_star || !rp.is_unital || !rp.is_faithful) {
    throw std::runtime_error(
        "assembled physical representation fails star/unital/faithful checks");
  }
  const Representation rq = make_representation(s.dual_alg, s.psi, 1e-8);
  if (!rq.is_star || !rq.is_unital) {
    throw std::runtime_error(
        "assembled bond representation fails star/unital checks");
  }
}

/// Builds the direct-sum setup from labeled per-block irreps.
SymmetrySetup assemble(WeakHopfAlgebraTable alg, WeakHopfAlgebraTable dual_alg,
                       FusionRingData ring,
                       const std::vector<ExtractedIrrep>& ir_a,
                       const std::vector<ExtractedIrrep>& ir_d) {
  SymmetrySetup s;
  s.alg = std::move(alg);
  s.dual_alg = std::move(dual_alg);
  s.ring = std::move(ring);
  s.qdims = fp_dimensions(s.ring);
  const int n = s.alg.dim;
  const int k = s.ring.rank();

  int total_rank = 0;
  for (const auto& ir : ir_a) total_rank += ir.ideal_rank;
  if (total_rank != n) {
    throw std::runtime_error(
        "ideal ranks do not sum to the algebra dimension");
  }

  int off = 0;
  for (int a = 0; a < k; ++a) {
    s.phi_offset.push_back(off);
    s.phi_dim.push_back(ir_a[a].irrep_dim);
    off += ir_a[a].irrep_dim;
  }
  const int da = off;
  off = 0;
  for (int a = 0; a < k; ++a) {
    s.psi_offset.push_back(off);
    s.psi_dim.push_back(ir_d[a].irrep_dim);
    off += ir_d[a].irrep_dim;
  }
  const int dd = off;

  s.phi.assign(n, Mat::Zero(da, da));
  s.psi.assign(n, Mat::Zero(dd, dd));
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < k; ++a) {
      s.phi[x].block(s.phi_offset[a], s.phi_offset[a], s.phi_dim[a],
                     s.phi_dim[a]) = ir_a[a].mats[x];
      s.psi[x].block(s.psi_offset[a], s.psi_offset[a], s.psi_dim[a],
                     s.psi_dim[a]) = ir_d[a].mats[x];
    }
  }
  finish_setup(s);
  return s;
}

}  // namespace

SymmetrySetup fib_setup() {
  SymmetrySetup s;
  s.alg = build_fib_wha();
  s.dual_alg = dual(s.alg);
  s.ring = fib_ring();
  s.qdims = fp_dimensions(s.ring);
  const FibPairing pairing = build_fib_pairing();
  s.phi = build_phi(s.alg).mats;
  s.psi = build_psi(s.dual_alg, pairing).mats;
  s.phi_offset = {0, 2};
  s.phi_dim = {2, 3};
  s.psi_offset = {0, 2};
  s.psi_dim = {2, 3};
  finish_setup(s);
  return s;
}

namespace {

SymmetrySetup materialize_with(const WeakHopfAlgebraTable& alg,
                               const FusionRingData& ring,
                               std::mt19937_64& rng,
                               std::vector<ExtractedIrrep> ir_a,
                               const WeakHopfAlgebraTable& dual_alg) {
  std::vector<Vec> ps_d = central_idempotents(dual_alg, rng);
  std::vector<ExtractedIrrep> ir_d = extract_irreps(dual_alg, ps_d, rng);
  const std::vector<int> nd = block_fusion(dual_alg, ps_d, ir_d);
  const std::vector<int> perm_d = match_labels(nd, ring);
  // Position blocks at their matched label index.
  std::vector<ExtractedIrrep> ir_d_ordered(ring.rank());
  for (std::size_t i = 0; i < ir_d.size(); ++i) {
    ir_d_ordered[perm_d[i]] = std::move(ir_d[i]);
  }
  return assemble(alg, dual_alg, ring, ir_a, ir_d_ordered);
}

}  // namespace

SymmetrySetup materialize(const WeakHopfAlgebraTable& alg,
                          const FusionRingData& ring, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const WeakHopfAlgebraTable dual_alg = dual(alg);
  std::vector<Vec> ps_a = central_idempotents(alg, rng);
  std::vector<ExtractedIrrep> ir_a = extract_irreps(alg, ps_a, rng);
  const std::vector<int> na = block_fusion(alg, ps_a, ir_a);
  const std::vector<int> perm_a = match_labels(na, ring);
  std::vector<ExtractedIrrep> ir_a_ordered(ring.rank());
  for (std::size_t i = 0; i < ir_a.size(); ++i) {
    ir_a_ordered[perm_a[i]] = std::move(ir_a[i]);
  }
  return materialize_with(alg, ring, rng, std::move(ir_a_ordered), dual_alg);
}

SymmetrySetup materialize_intrinsic(const WeakHopfAlgebraTable& alg,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const WeakHopfAlgebraTable dual_alg = dual(alg);
  std::vector<Vec> ps_a = central_idempotents(alg, rng);
  std::vector<ExtractedIrrep> ir_a = extract_irreps(alg, ps_a, rng);
  const std::vector<int> na = block_fusion(alg, ps_a, ir_a);
  const int k = static_cast<int>(ir_a.size());

  // Read the ring off the block fusion.  Identify the unit block, order
  // blocks unit-first then by ascending Frobenius-Perron dimension, and
  // relabel.
  const auto nb = [&](int a, int b, int c) {
    return na[static_cast<std::size_t>((a * k + b)) * k + c];
  };
  int unit_block = -1;
  for (int a = 0; a < k; ++a) {
    bool is_unit = true;
    for (int b = 0; b < k && is_unit; ++b) {
      for (int c = 0; c < k && is_unit; ++c) {
        const int expect = (b == c) ? 1 : 0;
        if (nb(a, b, c) != expect || nb(b, a, c) != expect) is_unit = false;
      }
    }
    if (is_unit) {
      unit_block = a;
      break;
    }
  }
  if (unit_block < 0) {
    throw std::runtime_error("block fusion has no unit block");
  }
  FusionRingData raw;
  {
    std::vector<std::string> labels(k);
    for (int a = 0; a < k; ++a) labels[a] = "b" + std::to_string(a);
    raw.init(std::move(labels));
    raw.unit = unit_block;
    raw.n_flat = na;
  }
  const std::vector<double> raw_dims = fp_dimensions(raw);
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if ((x == unit_block) != (y == unit_block)) return x == unit_block;
    if (std::abs(raw_dims[x] - raw_dims[y]) > 1e-9) {
      return raw_dims[x] < raw_dims[y];
    }
    return x < y;
  });
  std::vector<int> pos(k);  // old block index -> new label index
  for (int i = 0; i < k; ++i) pos[order[i]] = i;

  FusionRingData ring;
  {
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) labels[i] = "b" + std::to_string(i);
    ring.init(std::move(labels));
    ring.name = alg.name + ".blocks";
    ring.unit = 0;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        for (int c = 0; c < k; ++c) {
          ring.n_ref(pos[a], pos[b], pos[c]) = nb(a, b, c);
        }
      }
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (ring.n(a, b, 0) == 1) ring.dual[a] = b;
      }
    }
    validate_ring(ring);
  }

  std::vector<ExtractedIrrep> ir_a_ordered(k);
  for (int a = 0; a < k; ++a) ir_a_ordered[pos[a]] = std::move(ir_a[a]);
  return materialize_with(alg, ring, rng, std::move(ir_a_ordered), dual_alg);
}

}  // namespace wharf
