#include "wharf/rfp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wharf {

// ==== fixed-point states ====================================================

Mat weight_power(const SymmetrySetup& s, int len, std::size_t entry_cap) {
  if (len < 1) {
    throw std::invalid_argument("weight_power: length must be >= 1");
  }
  Mat w = s.omega;
  for (int i = 1; i < len; ++i) w = kron(w, s.omega, entry_cap);
  return w;
}

double RfpDiagnostics::max_residual() const {
  double worst = std::abs(n_m - cxd{n_m_expected});
  worst = std::max(worst, trace_dev);
  worst = std::max(worst, herm);
  worst = std::max(worst, idem);
  worst = std::max(worst, comm);
  worst = std::max(worst, std::max(0.0, -min_eig));
  return worst;
}

RfpDiagnostics build_rfp(const SymmetrySetup& s, int sector, int len,
                         std::size_t entry_cap) {
  if (sector < 0 || sector >= s.ring.rank()) {
    throw std::invalid_argument("build_rfp: sector out of range");
  }
  RfpDiagnostics r;
  r.sector = sector;
  r.len = len;
  const MpoOperator op = symmetry_mpo(s, s.sector_boundary(sector));
  r.o_pi = assemble_dense(op, len, entry_cap);
  const Mat w = weight_power(s, len, entry_cap);
  r.n_m = (r.o_pi * w).trace();
  r.n_m_expected = 1.0 / s.sector_dim_sq(sector);
  if (std::abs(r.n_m) == 0.0) {
    throw std::runtime_error("build_rfp: vanishing normalization");
  }
  r.rho = (r.o_pi * w) / r.n_m;
  r.trace_dev = std::abs(r.rho.trace() - cxd{1.0});
  r.herm = (r.rho - r.rho.adjoint()).cwiseAbs().maxCoeff();
  r.idem = (r.o_pi * r.o_pi - r.o_pi).cwiseAbs().maxCoeff();
  r.comm = (r.o_pi * w - w * r.o_pi).cwiseAbs().maxCoeff();
  r.min_eig = min_hermitian_eig(r.rho);
  return r;
}

std::vector<cxd> strong_symmetry_spectrum(const SymmetrySetup& s,
                                          const Mat& rho, int len,
                                          std::size_t entry_cap) {
  const cxd denom = (rho.adjoint() * rho).trace();
  if (std::abs(denom) == 0.0) {
    throw std::invalid_argument("strong_symmetry_spectrum: zero state");
  }
  std::vector<cxd> out;
  for (int a = 0; a < s.ring.rank(); ++a) {
    const Mat oa = assemble_dense(label_mpo(s, a), len, entry_cap);
    out.push_back((rho.adjoint() * oa * rho).trace() / denom);
  }
  return out;
}

// ==== reduced states ========================================================

TraceOutReport check_trace_out(const SymmetrySetup& s, int len,
                               std::size_t entry_cap) {
  if (len < 2) {
    throw std::invalid_argument("check_trace_out: length must be >= 2");
  }
  const int phys = s.phys_dim();
  int left = 1;
  for (int i = 0; i < len - 1; ++i) left *= phys;
  const MpoTensor tensor = build_symmetry_tensor(s);
  const Mat w_short = weight_power(s, len - 1, entry_cap);
  const Mat e_bond = s.psi_of(s.theta);

  TraceOutReport rep;
  std::vector<Mat> reductions;
  for (int m = 0; m < s.ring.rank(); ++m) {
    const RfpDiagnostics r = build_rfp(s, m, len, entry_cap);
    const Mat red = partial_trace(r.rho, {left, phys}, 1);
    reductions.push_back(red);

    // Length-(len-1) closure with the boundary dressed by the transfer
    // element.
    const Mat x_corr = s.sector_boundary(m) * e_bond;
    const Mat o_corr =
        assemble_dense(MpoOperator{tensor, x_corr}, len - 1, entry_cap);
    Mat pred = o_corr * w_short;
    pred /= pred.trace();
    rep.corrected.push_back((red - pred).cwiseAbs().maxCoeff());

    // Undressed closure: a genuinely different state.
    const Mat o_naive = assemble_dense(MpoOperator{tensor, s.sector_boundary(m)},
                                       len - 1, entry_cap);
    Mat pred_naive = o_naive * w_short;
    pred_naive /= pred_naive.trace();
    rep.naive.push_back((red - pred_naive).cwiseAbs().maxCoeff());
  }
  for (std::size_t i = 0; i < reductions.size(); ++i) {
    for (std::size_t j = i + 1; j < reductions.size(); ++j) {
      rep.cross_sector =
          std::max(rep.cross_sector,
                   (reductions[i] - reductions[j]).cwiseAbs().maxCoeff());
    }
  }
  return rep;
}

// ==== purification ==========================================================

PurificationReport check_purification(const SymmetrySetup& s, int sector,
                                      int len, std::size_t entry_cap) {
  const RfpDiagnostics r = build_rfp(s, sector, len, entry_cap);
  const int phys = s.phys_dim();

  // sqrt(Omega)^{(x) len}
  Mat sq = Mat::Zero(phys, phys);
  for (int i = 0; i < phys; ++i) sq(i, i) = std::sqrt(s.omega(i, i));
  Mat sq_pow = sq;
  for (int i = 1; i < len; ++i) sq_pow = kron(sq_pow, sq, entry_cap);

  const double nm = r.n_m.real();
  if (nm <= 0.0) {
    throw std::runtime_error("check_purification: non-positive normalization");
  }
  const Mat m = (r.o_pi * sq_pow) / std::sqrt(nm);

  PurificationReport rep;
  rep.reconstruction = (m * m.adjoint() - r.rho).cwiseAbs().maxCoeff();

  // vec(M) as a state on system (x) ancilla.
  const auto p = m.rows();
  Vec vec_m(p * p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) vec_m(i * p + j) = m(i, j);
  }
  const Mat eye = Mat::Identity(p, p);
  for (int a = 0; a < s.ring.rank(); ++a) {
    const Mat oa = assemble_dense(label_mpo(s, a), len, entry_cap);
    const SymmetricStateReport sym =
        check_state_symmetric(kron(oa, eye, entry_cap), vec_m);
    rep.cs_defect.push_back(sym.cs_defect);
    rep.lambda.push_back(sym.lambda);
  }

  // The same state as a uniform matrix product state with weight-dressed
  // site tensors C^{(i j)} = B^{ij} sqrt(omega_j).
  const MpoTensor full = build_symmetry_tensor(s);
  MpsTensor mt;
  mt.phys = phys * phys;
  mt.bond = full.bond;
  mt.a.resize(static_cast<std::size_t>(mt.phys));
  for (int i = 0; i < phys; ++i) {
    for (int j = 0; j < phys; ++j) {
      mt.a[static_cast<std::size_t>(i) * phys + j] =
          full.at(i, j) * std::sqrt(s.omega(j, j));
    }
  }
  const Vec psi_mps = assemble_mps_state(
      mt, s.sector_boundary(sector) / std::sqrt(nm), len, entry_cap);

  // Reorder site-local (i, j) pairs into the (row string, column string)
  // layout of vec(M).
  double mismatch = 0.0;
  for (Eigen::Index q = 0; q < psi_mps.size(); ++q) {
    Eigen::Index rest = q;
    int istr = 0;
    int jstr = 0;
    std::vector<int> pairs(static_cast<std::size_t>(len));
    for (int k = len - 1; k >= 0; --k) {
      pairs[static_cast<std::size_t>(k)] = static_cast<int>(rest % (phys * phys));
      rest /= phys * phys;
    }
    for (int k = 0; k < len; ++k) {
      istr = istr * phys + pairs[static_cast<std::size_t>(k)] / phys;
      jstr = jstr * phys + pairs[static_cast<std::size_t>(k)] % phys;
    }
    mismatch = std::max(mismatch,
                        std::abs(psi_mps(q) - vec_m(static_cast<Eigen::Index>(
                                                 istr) * p +
                                             jstr)));
  }
  rep.mps_match = mismatch;
  return rep;
}

// ==== dressed transfer spectra ==============================================

MpoTensor dressed_tensor(const SymmetrySetup& s, int label) {
  MpoTensor t = restricted_tensor(s, label);
  for (int i = 0; i < t.phys; ++i) {
    for (int j = 0; j < t.phys; ++j) {
      t.at(i, j) *= std::sqrt(s.omega(j, j));
    }
  }
  return t;
}

ChannelSpectrumReport check_channel_spectrum(const SymmetrySetup& s, int a,
                                             int b, double tol) {
  const Mat e = transfer_matrix(dressed_tensor(s, a), dressed_tensor(s, b));
  std::vector<cxd> spec = eig_spectrum(e).eigenvalues;

  const Mat eth = s.psi_of(s.theta);
  std::vector<cxd> predicted;
  for (int c = 0; c < s.ring.rank(); ++c) {
    const int mult = s.ring.n(a, b, c);
    if (mult == 0) continue;
    const Mat block = eth.block(s.psi_offset[c], s.psi_offset[c],
                                s.psi_dim[c], s.psi_dim[c]);
    const std::vector<cxd> bs = eig_spectrum(block).eigenvalues;
    for (int rpt = 0; rpt < mult; ++rpt) {
      predicted.insert(predicted.end(), bs.begin(), bs.end());
    }
  }
  predicted.resize(spec.size(), cxd{0.0});

  const auto by_parts = [](const cxd& u, const cxd& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  };
  std::sort(spec.begin(), spec.end(), by_parts);
  std::sort(predicted.begin(), predicted.end(), by_parts);

  ChannelSpectrumReport rep;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    rep.multiset_dev = std::max(rep.multiset_dev,
                                std::abs(spec[i] - predicted[i]));
  }
  for (const cxd& lambda : spec) {
    if (std::abs(lambda - cxd{1.0}) < tol) ++rep.unit_multiplicity;
  }
  rep.expected_multiplicity = s.ring.n(a, b, s.ring.unit);
  return rep;
}

}  // namespace wharf
