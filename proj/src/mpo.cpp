#include "wharf/mpo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wharf {

namespace {

cxl to_cxl(const cxd& z) {
  return cxl{static_cast<long double>(z.real()),
             static_cast<long double>(z.imag())};
}

/// phys^len with an overflow/cap guard on the squared result.
std::size_t dense_dim(int phys, int len, std::size_t entry_cap) {
  std::size_t dim = 1;
  for (int i = 0; i < len; ++i) {
    dim *= static_cast<std::size_t>(phys);
    if (dim * dim > entry_cap) {
      std::ostringstream msg;
      msg << "dense assembly of length " << len << " with local dimension "
          << phys << " exceeds the entry cap";
      throw std::invalid_argument(msg.str());
    }
  }
  return dim;
}

}  // namespace

// ==== site tensors ==========================================================

MpoTensor build_symmetry_tensor(const SymmetrySetup& s) {
  MpoTensor t;
  t.phys = s.phys_dim();
  t.bond = s.bond_dim();
  t.b.assign(static_cast<std::size_t>(t.phys) * t.phys,
             Mat::Zero(t.bond, t.bond));
  for (int x = 0; x < s.alg.dim; ++x) {
    for (int i = 0; i < t.phys; ++i) {
      for (int j = 0; j < t.phys; ++j) {
        const cxd c = s.phi[x](i, j);
        if (c != cxd{0.0}) t.at(i, j) += c * s.psi[x];
      }
    }
  }
  return t;
}

MpoTensor restricted_tensor(const SymmetrySetup& s, int label) {
  if (label < 0 || label >= s.ring.rank()) {
    throw std::invalid_argument("restricted_tensor: label out of range");
  }
  const MpoTensor full = build_symmetry_tensor(s);
  const int off = s.psi_offset[label];
  const int d = s.psi_dim[label];
  MpoTensor t;
  t.phys = full.phys;
  t.bond = d;
  t.b.reserve(full.b.size());
  for (const Mat& m : full.b) t.b.push_back(m.block(off, off, d, d));
  return t;
}

MpoTensor product_tensor(const MpoTensor& p, const MpoTensor& q) {
  if (p.phys != q.phys) {
    throw std::invalid_argument(
        "product_tensor: physical dimensions disagree");
  }
  MpoTensor t;
  t.phys = p.phys;
  t.bond = p.bond * q.bond;
  t.b.assign(static_cast<std::size_t>(t.phys) * t.phys,
             Mat::Zero(t.bond, t.bond));
  for (int i = 0; i < t.phys; ++i) {
    for (int k = 0; k < t.phys; ++k) {
      for (int j = 0; j < t.phys; ++j) {
        t.at(i, k) += kron(p.at(i, j), q.at(j, k));
      }
    }
  }
  return t;
}

// ==== boundary closures =====================================================

MpoOperator symmetry_mpo(const SymmetrySetup& s, const Mat& x, double tol) {
  const int d = s.bond_dim();
  if (x.rows() != d || x.cols() != d) {
    throw std::invalid_argument("symmetry_mpo: boundary shape mismatch");
  }
  double resid = 0.0;
  for (int y = 0; y < s.alg.dim; ++y) {
    resid = std::max(resid,
                     (x * s.psi[y] - s.psi[y] * x).cwiseAbs().maxCoeff());
  }
  if (resid > tol) {
    std::ostringstream msg;
    msg << "symmetry_mpo: boundary does not commute with the bond "
           "representation (residual "
        << resid << ")";
    throw std::invalid_argument(msg.str());
  }
  return MpoOperator{build_symmetry_tensor(s), x};
}

MpoOperator label_mpo(const SymmetrySetup& s, int label) {
  MpoTensor t = restricted_tensor(s, label);
  const int d = t.bond;
  return MpoOperator{std::move(t), Mat::Identity(d, d)};
}

MpoOperator mpo_dagger(const MpoOperator& op) {
  MpoOperator out;
  out.tensor.phys = op.tensor.phys;
  out.tensor.bond = op.tensor.bond;
  out.tensor.b.resize(op.tensor.b.size());
  for (int i = 0; i < op.tensor.phys; ++i) {
    for (int j = 0; j < op.tensor.phys; ++j) {
      out.tensor.at(i, j) = op.tensor.at(j, i).conjugate();
    }
  }
  out.boundary = op.boundary.conjugate();
  return out;
}

MpoOperator product_mpo(const MpoOperator& p, const MpoOperator& q) {
  return MpoOperator{product_tensor(p.tensor, q.tensor),
                     kron(p.boundary, q.boundary)};
}

// ==== dense assembly ========================================================

Mat assemble_dense(const MpoOperator& op, int len, std::size_t entry_cap) {
  const int phys = op.tensor.phys;
  const int bond = op.tensor.bond;
  if (len < 1) throw std::invalid_argument("assemble_dense: length must be >= 1");
  if (op.boundary.rows() != bond || op.boundary.cols() != bond) {
    throw std::invalid_argument("assemble_dense: boundary shape mismatch");
  }
  (void)dense_dim(phys, len, entry_cap);

  // site[m*bond + r](i, j) = B^{ij}(m, r)
  std::vector<Mat> site(static_cast<std::size_t>(bond) * bond,
                        Mat::Zero(phys, phys));
  for (int i = 0; i < phys; ++i) {
    for (int j = 0; j < phys; ++j) {
      const Mat& bm = op.tensor.at(i, j);
      for (int l = 0; l < bond; ++l) {
        for (int r = 0; r < bond; ++r) {
          site[static_cast<std::size_t>(l) * bond + r](i, j) = bm(l, r);
        }
      }
    }
  }
  std::vector<Mat> cur = site;
  for (int step = 1; step < len; ++step) {
    std::vector<Mat> next(static_cast<std::size_t>(bond) * bond);
    for (int l = 0; l < bond; ++l) {
      for (int r = 0; r < bond; ++r) {
        Mat acc;
        bool first = true;
        for (int m = 0; m < bond; ++m) {
          const Mat term =
              kron(cur[static_cast<std::size_t>(l) * bond + m],
                   site[static_cast<std::size_t>(m) * bond + r], entry_cap);
          if (first) {
            acc = term;
            first = false;
          } else {
            acc += term;
          }
        }
        next[static_cast<std::size_t>(l) * bond + r] = std::move(acc);
      }
    }
    cur = std::move(next);
  }
  const auto dim = static_cast<Eigen::Index>(cur.front().rows());
  Mat out = Mat::Zero(dim, dim);
  for (int a = 0; a < bond; ++a) {
    for (int b = 0; b < bond; ++b) {
      const cxd w = op.boundary(a, b);
      if (w != cxd{0.0}) out += w * cur[static_cast<std::size_t>(b) * bond + a];
    }
  }
  return out;
}

Vec assemble_mps_state(const MpsTensor& t, const Mat& boundary, int len,
                       std::size_t entry_cap) {
  const int phys = t.phys;
  const int bond = t.bond;
  if (len < 1) {
    throw std::invalid_argument("assemble_mps_state: length must be >= 1");
  }
  if (boundary.rows() != bond || boundary.cols() != bond) {
    throw std::invalid_argument("assemble_mps_state: boundary shape mismatch");
  }
  std::size_t dim = 1;
  for (int i = 0; i < len; ++i) {
    dim *= static_cast<std::size_t>(phys);
    if (dim > entry_cap) {
      throw std::invalid_argument(
          "assemble_mps_state: state exceeds the entry cap");
    }
  }
  // site[m*bond + r] = column vector (A^i(m, r))_i
  std::vector<Mat> site(static_cast<std::size_t>(bond) * bond,
                        Mat::Zero(phys, 1));
  for (int i = 0; i < phys; ++i) {
    for (int l = 0; l < bond; ++l) {
      for (int r = 0; r < bond; ++r) {
        site[static_cast<std::size_t>(l) * bond + r](i, 0) = t.a[i](l, r);
      }
    }
  }
  std::vector<Mat> cur = site;
  for (int step = 1; step < len; ++step) {
    std::vector<Mat> next(static_cast<std::size_t>(bond) * bond);
    for (int l = 0; l < bond; ++l) {
      for (int r = 0; r < bond; ++r) {
        Mat acc;
        bool first = true;
        for (int m = 0; m < bond; ++m) {
          const Mat term =
              kron(cur[static_cast<std::size_t>(l) * bond + m],
                   site[static_cast<std::size_t>(m) * bond + r], entry_cap);
          if (first) {
            acc = term;
            first = false;
          } else {
            acc += term;
          }
        }
        next[static_cast<std::size_t>(l) * bond + r] = std::move(acc);
      }
    }
    cur = std::move(next);
  }
  Mat out = Mat::Zero(cur.front().rows(), 1);
  for (int a = 0; a < bond; ++a) {
    for (int b = 0; b < bond; ++b) {
      const cxd w = boundary(a, b);
      if (w != cxd{0.0}) out += w * cur[static_cast<std::size_t>(b) * bond + a];
    }
  }
  return out.col(0);
}

// ==== transfer matrices and inner products ==================================

Mat transfer_matrix(const MpoTensor& p, const MpoTensor& q) {
  if (p.phys != q.phys) {
    throw std::invalid_argument(
        "transfer_matrix: physical dimensions disagree");
  }
  const int d = p.bond * q.bond;
  Mat e = Mat::Zero(d, d);
  for (int i = 0; i < p.phys; ++i) {
    for (int j = 0; j < p.phys; ++j) {
      e += kron(p.at(i, j).conjugate(), q.at(i, j));
    }
  }
  return e;
}

LdSquare transfer_matrix_ld(const MpoTensor& p, const MpoTensor& q) {
  if (p.phys != q.phys) {
    throw std::invalid_argument(
        "transfer_matrix_ld: physical dimensions disagree");
  }
  const int dp = p.bond;
  const int dq = q.bond;
  LdSquare e(dp * dq);
  for (int i = 0; i < p.phys; ++i) {
    for (int j = 0; j < p.phys; ++j) {
      const Mat& pm = p.at(i, j);
      const Mat& qm = q.at(i, j);
      for (int a = 0; a < dp; ++a) {
        for (int b = 0; b < dp; ++b) {
          const cxl pij = to_cxl(std::conj(pm(a, b)));
          if (pij == cxl{0.0L}) continue;
          for (int c = 0; c < dq; ++c) {
            for (int dd = 0; dd < dq; ++dd) {
              e.at(a * dq + c, b * dq + dd) += pij * to_cxl(qm(c, dd));
            }
          }
        }
      }
    }
  }
  return e;
}

cxd hs_inner(const MpoOperator& p, const MpoOperator& q, int len) {
  if (len < 1) throw std::invalid_argument("hs_inner: length must be >= 1");
  const Mat e = transfer_matrix(p.tensor, q.tensor);
  const Mat w = kron(p.boundary.conjugate(), q.boundary);
  return (w * matrix_power(e, len)).trace();
}

cxl hs_inner_ld(const MpoOperator& p, const MpoOperator& q, int len) {
  if (len < 1) throw std::invalid_argument("hs_inner_ld: length must be >= 1");
  const LdSquare e = transfer_matrix_ld(p.tensor, q.tensor);
  const LdSquare w =
      LdSquare::from(kron(p.boundary.conjugate(), q.boundary));
  return w.trace_prod(e.pow(len));
}

// ==== fusion and cross-checks ===============================================

double fusion_residual(const SymmetrySetup& s, int a, int b, int len,
                       bool extended_precision) {
  const int k = s.ring.rank();
  if (a < 0 || a >= k || b < 0 || b >= k) {
    throw std::invalid_argument("fusion_residual: label out of range");
  }
  const MpoOperator oa = label_mpo(s, a);
  const MpoOperator ob = label_mpo(s, b);
  const MpoOperator oab = product_mpo(oa, ob);
  std::vector<MpoOperator> oc;
  for (int c = 0; c < k; ++c) oc.push_back(label_mpo(s, c));

  const auto inner = [&](const MpoOperator& u, const MpoOperator& v) -> cxl {
    return extended_precision ? hs_inner_ld(u, v, len)
                              : to_cxl(hs_inner(u, v, len));
  };

  const cxl g = inner(oab, oab);
  cxl s_term{0.0L};
  cxl t_term{0.0L};
  for (int c = 0; c < k; ++c) {
    const int n1 = s.ring.n(a, b, c);
    if (n1 == 0) continue;
    s_term += static_cast<long double>(n1) * inner(oab, oc[c]);
    for (int c2 = 0; c2 < k; ++c2) {
      const int n2 = s.ring.n(a, b, c2);
      if (n2 == 0) continue;
      t_term += static_cast<long double>(n1) *
                static_cast<long double>(n2) * inner(oc[c], oc[c2]);
    }
  }
  const cxl num = g - cxl{2.0L * s_term.real(), 0.0L} + t_term;
  const long double denom = std::abs(g);
  if (denom == 0.0L) {
    throw std::runtime_error("fusion_residual: vanishing product norm");
  }
  return static_cast<double>(std::sqrt(std::abs(num) / denom));
}

double fusion_residual_dense(const SymmetrySetup& s, int a, int b, int len) {
  const int k = s.ring.rank();
  const Mat oa = assemble_dense(label_mpo(s, a), len);
  const Mat ob = assemble_dense(label_mpo(s, b), len);
  const Mat lhs = oa * ob;
  Mat rhs = Mat::Zero(lhs.rows(), lhs.cols());
  for (int c = 0; c < k; ++c) {
    const int n1 = s.ring.n(a, b, c);
    if (n1 != 0) {
      rhs += static_cast<double>(n1) * assemble_dense(label_mpo(s, c), len);
    }
  }
  const double scale = lhs.norm();
  if (scale == 0.0) {
    throw std::runtime_error("fusion_residual_dense: vanishing product");
  }
  return (lhs - rhs).norm() / scale;
}

Mat algebra_operator(const SymmetrySetup& s, const Mat& x, int len,
                     std::size_t entry_cap) {
  const int n = s.alg.dim;
  const int bond = s.bond_dim();
  if (x.rows() != bond || x.cols() != bond) {
    throw std::invalid_argument("algebra_operator: boundary shape mismatch");
  }
  if (len < 1) {
    throw std::invalid_argument("algebra_operator: length must be >= 1");
  }
  (void)dense_dim(s.phys_dim(), len, entry_cap);

  // Iterated coproduct power of the physical representation.
  std::vector<Mat> cur = s.phi;
  for (int step = 1; step < len; ++step) {
    std::vector<Mat> next(n);
    for (int z = 0; z < n; ++z) {
      Mat acc;
      bool first = true;
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          const cxd c = s.alg.gam(z, u, v);
          if (std::abs(c) <= 1e-15) continue;
          const Mat term = c * kron(s.phi[u], cur[v], entry_cap);
          if (first) {
            acc = term;
            first = false;
          } else {
            acc += term;
          }
        }
      }
      if (first) {
        const auto dim = static_cast<Eigen::Index>(s.phi[0].rows()) *
                         cur[0].rows();
        acc = Mat::Zero(dim, dim);
      }
      next[z] = std::move(acc);
    }
    cur = std::move(next);
  }
  const auto dim = cur.front().rows();
  Mat out = Mat::Zero(dim, dim);
  for (int z = 0; z < n; ++z) {
    const cxd coeff = (x * s.psi[z]).trace();
    if (coeff != cxd{0.0}) out += coeff * cur[z];
  }
  return out;
}

// ==== state symmetry ========================================================

SymmetricStateReport check_state_symmetric(const Mat& op, const Vec& psi) {
  if (op.cols() != psi.size()) {
    throw std::invalid_argument(
        "check_state_symmetric: operator/state shape mismatch");
  }
  const double n1 = psi.squaredNorm();
  if (n1 == 0.0) {
    throw std::invalid_argument("check_state_symmetric: zero state");
  }
  const Vec opsi = op * psi;
  const double n2 = opsi.squaredNorm();
  const cxd ip = psi.dot(opsi);
  SymmetricStateReport r;
  r.lambda = ip / n1;
  r.cs_defect = (n2 == 0.0) ? 0.0 : 1.0 - std::norm(ip) / (n1 * n2);
  return r;
}

}  // namespace wharf
