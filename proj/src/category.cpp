#include "wharf/category.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SVD>

#include "wharf/errors.hpp"

namespace wharf {

// ==== category data =========================================================

Category::Category(FusionRingData ring, std::map<std::array<int, 6>, cxd> f_entries,
                   std::string name)
    : ring_(std::move(ring)), f_entries_(std::move(f_entries)), name_(std::move(name)) {
  validate_ring(ring_);
  dims_ = fp_dimensions(ring_);
  const int r = ring_.rank();
  kappa_.resize(r);
  for (int a = 0; a < r; ++a) {
    kappa_[a] = dims_[a] * f(a, dual(a), a, a, unit(), unit());
  }
}

cxd Category::f(int a, int b, int c, int d, int e, int ff) const {
  if (!(ring_.n(a, b, e) >= 1 && ring_.n(e, c, d) >= 1 &&
        ring_.n(b, c, ff) >= 1 && ring_.n(a, ff, d) >= 1)) {
    return cxd{0.0, 0.0};
  }
  const auto it = f_entries_.find({a, b, c, d, e, ff});
  return it == f_entries_.end() ? cxd{1.0, 0.0} : it->second;
}

// ==== consistency checks ====================================================

double CategoryValidation::max_residual() const {
  return std::max({pentagon, f_unitarity, triangle, dim_consistency});
}

bool CategoryValidation::pass(double tol) const { return max_residual() <= tol; }

CategoryValidation validate_category(const Category& cat) {
  CategoryValidation out;
  const int r = cat.rank();

  // Pentagon equation in the multiplicity-free form
  //   F(f,c,d,e,g,l) F(a,b,l,e,f,k) =
  //       sum_h F(a,b,c,g,f,h) F(a,h,d,e,g,k) F(b,c,d,k,h,l).
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        for (int d = 0; d < r; ++d) {
          for (int e = 0; e < r; ++e) {
            for (int ff = 0; ff < r; ++ff) {
              for (int g = 0; g < r; ++g) {
                for (int k = 0; k < r; ++k) {
                  for (int l = 0; l < r; ++l) {
                    const cxd lhs =
                        cat.f(ff, c, d, e, g, l) * cat.f(a, b, l, e, ff, k);
                    cxd rhs = 0.0;
                    for (int h = 0; h < r; ++h) {
                      rhs += cat.f(a, b, c, g, ff, h) *
                             cat.f(a, h, d, e, g, k) * cat.f(b, c, d, k, h, l);
                    }
                    out.pentagon = std::max(out.pentagon, std::abs(lhs - rhs));
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  // Unitarity of each recoupling block F^{abc}_d over admissible channels.
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        for (int d = 0; d < r; ++d) {
          std::vector<int> es;
          std::vector<int> fs;
          for (int e = 0; e < r; ++e) {
            if (cat.ring().n(a, b, e) >= 1 && cat.ring().n(e, c, d) >= 1) {
              es.push_back(e);
            }
          }
          for (int ff = 0; ff < r; ++ff) {
            if (cat.ring().n(b, c, ff) >= 1 && cat.ring().n(a, ff, d) >= 1) {
              fs.push_back(ff);
            }
          }
          if (es.empty()) continue;
          Mat m(static_cast<int>(es.size()), static_cast<int>(fs.size()));
          for (std::size_t i = 0; i < es.size(); ++i) {
            for (std::size_t j = 0; j < fs.size(); ++j) {
              m(static_cast<int>(i), static_cast<int>(j)) =
                  cat.f(a, b, c, d, es[i], fs[j]);
            }
          }
          const Mat gram = m * m.adjoint();
          out.f_unitarity = std::max(
              out.f_unitarity,
              (gram - Mat::Identity(gram.rows(), gram.cols()))
                  .cwiseAbs()
                  .maxCoeff());
        }
      }
    }
  }

  // Unit triangles: inserting the unit in any slot fixes both channels and
  // the coefficient must be exactly 1 in this gauge.
  const int one = cat.unit();
  for (int a = 0; a < r; ++a) {
    for (int c = 0; c < r; ++c) {
      for (int d = 0; d < r; ++d) {
        if (cat.ring().n(a, c, d) >= 1) {
          out.triangle = std::max(
              out.triangle, std::abs(cat.f(a, one, c, d, a, c) - cxd{1.0}));
          out.triangle = std::max(
              out.triangle, std::abs(cat.f(one, a, c, d, a, d) - cxd{1.0}));
          out.triangle = std::max(
              out.triangle, std::abs(cat.f(a, c, one, d, d, c) - cxd{1.0}));
        }
      }
    }
  }

  // Dimension consistency: the Frobenius-Perron dimensions represent the
  // ring, and each kappa_a = d_a F(a,abar,a,a,1,1) is unimodular.
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      double sum = 0.0;
      for (int c = 0; c < r; ++c) sum += cat.ring().n(a, b, c) * cat.dim(c);
      out.dim_consistency = std::max(out.dim_consistency,
                                     std::abs(cat.dim(a) * cat.dim(b) - sum));
    }
    out.dim_consistency =
        std::max(out.dim_consistency, std::abs(std::abs(cat.kappa(a)) - 1.0));
  }
  return out;
}

// ==== double-triangle basis =================================================

CompiledBasis enumerate_basis(const Category& cat) {
  const int r = cat.rank();
  for (const int v : cat.ring().n_flat) {
    if (v > 1) {
      throw UnsupportedError(
          "fusion multiplicities above one are not supported by the "
          "double-triangle compiler");
    }
  }
  CompiledBasis basis;
  for (int a = 0; a < r; ++a) {
    std::vector<std::pair<int, int>> pairs;
    for (int c2 = 0; c2 < r; ++c2) {
      for (int c1 = 0; c1 < r; ++c1) {
        if (cat.adm(c1, c2, a)) pairs.emplace_back(c1, c2);
      }
    }
    for (const auto& [c1, c2] : pairs) {
      for (const auto& [d1, d2] : pairs) {
        const std::array<int, 5> key{a, c1, c2, d1, d2};
        basis.index[key] = basis.size();
        basis.elems.push_back(key);
      }
    }
  }
  return basis;
}

std::string basis_label(const Category& cat, const std::array<int, 5>& elem) {
  const auto& lab = cat.ring().labels;
  std::ostringstream os;
  os << "x_" << lab[elem[0]] << "(" << lab[elem[1]] << "," << lab[elem[2]]
     << "|" << lab[elem[3]] << "," << lab[elem[4]] << ")";
  return os.str();
}

// ==== compilation ===========================================================

WeakHopfAlgebraTable compile_structure(const Category& cat,
                                       const CompiledBasis& basis) {
  const int n = basis.size();
  WeakHopfAlgebraTable table;
  table.init(n);
  table.name = cat.name() + ".compiled";
  for (int i = 0; i < n; ++i) {
    table.basis_labels[i] = basis_label(cat, basis.elems[i]);
  }
  const int r = cat.rank();

  // Product: stack x_a(c1,c2|d1,d2) under x_b(c2,c3|d2,d3), recouple both
  // sides into the right-associated tree basis and close the parallel (b,a)
  // strands; the c side carries F, the d side its conjugate.
  for (const auto& ex : basis.elems) {
    const auto [a, c1, c2, d1, d2] = ex;
    for (const auto& ey : basis.elems) {
      const auto [b, c2p, c3, d2p, d3] = ey;
      if (c2 != c2p || d2 != d2p) continue;
      const int x = basis.at(ex);
      const int y = basis.at(ey);
      for (int g = 0; g < r; ++g) {
        if (!(cat.adm(c1, c3, g) && cat.adm(d1, d3, g))) continue;
        const cxd coef = cat.f(c3, b, a, c1, c2, g) *
                         std::conj(cat.f(d3, b, a, d1, d2, g)) *
                         std::sqrt(cat.dim(a) * cat.dim(b) / cat.dim(g));
        if (std::abs(coef) > 1e-15) {
          table.lam_ref(x, y, basis.at({g, c1, c3, d1, d3})) += coef;
        }
      }
    }
  }

  // Coproduct: split the c side at every admissible intermediate pair.
  for (const auto& ex : basis.elems) {
    const auto [a, c1, c2, d1, d2] = ex;
    const int x = basis.at(ex);
    for (int e1 = 0; e1 < r; ++e1) {
      for (int e2 = 0; e2 < r; ++e2) {
        if (!cat.adm(e1, e2, a)) continue;
        table.gam_ref(x, basis.at({a, e1, e2, d1, d2}),
                      basis.at({a, c1, c2, e1, e2})) +=
            std::sqrt(cat.dim(e1) / (cat.dim(a) * cat.dim(e2)));
      }
    }
  }

  // Unit: sum of the diagonal unit-label elements.
  for (int c = 0; c < r; ++c) {
    for (int dd = 0; dd < r; ++dd) {
      table.unit(basis.at({cat.unit(), c, c, dd, dd})) = 1.0;
    }
  }

  // Counit: supported on elements with matching c- and d-pairs.
  for (const auto& ex : basis.elems) {
    const auto [a, c1, c2, d1, d2] = ex;
    if (c1 == d1 && c2 == d2) {
      table.counit(basis.at(ex)) =
          std::sqrt(cat.dim(a) * cat.dim(c2) / cat.dim(c1));
    }
  }
  return table;
}

std::pair<Mat, int> solve_antipode(const WeakHopfAlgebraTable& table) {
  const int n = table.dim;
  // m2[x,y] = eps(e_x e_y);  d1[a,b] = coefficient of e_a (x) e_b in
  // Delta(1).  The two counital maps eps_t, eps_s are their compositions.
  Mat m2 = Mat::Zero(n, n);
  Mat d1 = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      cxd acc = 0.0;
      for (int z = 0; z < n; ++z) acc += table.lam(x, y, z) * table.counit(z);
      m2(x, y) = acc;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      cxd acc = 0.0;
      for (int z = 0; z < n; ++z) acc += table.unit(z) * table.gam(z, a, b);
      d1(a, b) = acc;
    }
  }
  Mat eps_t = Mat::Zero(n, n);  // eps_t[x,v] = sum_b d1[v,b] m2[x,b]
  Mat eps_s = Mat::Zero(n, n);  // eps_s[x,v] = sum_a d1[a,v] m2[a,x]
  for (int x = 0; x < n; ++x) {
    for (int v = 0; v < n; ++v) {
      cxd t = 0.0;
      cxd s = 0.0;
      for (int b = 0; b < n; ++b) t += d1(v, b) * m2(x, b);
      for (int a = 0; a < n; ++a) s += d1(a, v) * m2(a, x);
      eps_t(x, v) = t;
      eps_s(x, v) = s;
    }
  }

  // Unknown S[z,a] flattened as z*n + a; rows are the equations indexed
  // (x,v) for each of the two identities.
  const int nn = n * n;
  Mat big = Mat::Zero(2 * nn, nn);
  Vec rhs = Vec::Zero(2 * nn);
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const cxd gxa = table.gam(x, a, b);
        if (std::abs(gxa) < 1e-16) continue;
        for (int z = 0; z < n; ++z) {
          for (int v = 0; v < n; ++v) {
            // eq1: sum_{a,b,z} G[x,a,b] S[z,a] L[z,b,v] = eps_t[x,v]
            const cxd l1 = table.lam(z, b, v);
            if (std::abs(l1) > 1e-16) big(x * n + v, z * n + a) += gxa * l1;
            // eq2: sum_{a,b,z} G[x,a,b] S[z,b] L[a,z,v] = eps_s[x,v]
            const cxd l2 = table.lam(a, z, v);
            if (std::abs(l2) > 1e-16) {
              big(nn + x * n + v, z * n + b) += gxa * l2;
            }
          }
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int v = 0; v < n; ++v) {
      rhs(x * n + v) = eps_t(x, v);
      rhs(nn + x * n + v) = eps_s(x, v);
    }
  }

  Eigen::BDCSVD<Mat> svd(big, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec sol = svd.solve(rhs);
  const auto& sv = svd.singularValues();
  const double cutoff =
      sv.size() ? sv(0) * 2.0 * nn * std::numeric_limits<double>::epsilon()
                : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  Mat s = Mat::Zero(n, n);
  for (int z = 0; z < n; ++z) {
    for (int a = 0; a < n; ++a) s(z, a) = sol(z * n + a);
  }
  return {s, rank};
}

std::vector<int> star_sigma(const Category& cat, const CompiledBasis& basis) {
  std::vector<int> sig(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const auto [a, c1, c2, d1, d2] = basis.elems[i];
    sig[i] = basis.at({cat.dual(a), c2, c1, d2, d1});
  }
  return sig;
}

Mat star_matrix(const Category& cat, const CompiledBasis& basis, double p_exp,
                bool use_kappa) {
  const int n = basis.size();
  Mat t = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto [a, c1, c2, d1, d2] = basis.elems[i];
    cxd mu = std::pow(cat.dim(c2) / cat.dim(c1), p_exp);
    if (use_kappa) mu *= cat.kappa(a);
    t(basis.at({cat.dual(a), c2, c1, d2, d1}), i) = mu;
  }
  return t;
}

namespace {

cxd uphase(cxd z) { return z / std::abs(z); }

}  // namespace

std::pair<Mat, std::vector<cxd>> star_closed(const Category& cat,
                                             const CompiledBasis& basis) {
  const int n = basis.size();
  const std::vector<int> sig = star_sigma(cat, basis);
  std::vector<cxd> mu(n);
  for (int i = 0; i < n; ++i) {
    const auto [a, c1, c2, d1, d2] = basis.elems[i];
    const int ab = cat.dual(a);
    // The dimension ratio comes from the two line bends; the F-phases carry
    // the associator (trivial for categories with positive real F here).
    const cxd fc = cat.f(ab, a, c2, c2, cat.unit(), c1);
    const cxd fd = cat.f(ab, a, d2, d2, cat.unit(), d1);
    mu[i] = (cat.dim(c2) / cat.dim(c1)) * uphase(fc) * std::conj(uphase(fd));
  }
  Mat t = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) t(sig[i], i) = mu[i];
  return {t, mu};
}

namespace {

/// One propagation constraint mu[t] = k * mu[p] * mu[q].
struct MuConstraint {
  int t;
  cxd k;
  int p;
  int q;
};

/// Fills unknown entries of mu from the constraints and the antilinear
/// involution mu[sig[x]] = 1 / conj(mu[x]); returns whether anything changed.
bool sweep_mu(const std::vector<MuConstraint>& cons, const std::vector<int>& sig,
              std::vector<cxd>& mu, std::vector<char>& known) {
  bool changed = false;
  for (const auto& c : cons) {
    const bool kt = known[c.t];
    const bool kp = known[c.p];
    const bool kq = known[c.q];
    if (c.t == c.p && c.p == c.q) {
      if (!kt) {
        mu[c.t] = cxd{1.0} / c.k;
        known[c.t] = 1;
        changed = true;
      }
    } else if (c.t == c.p) {
      if (!kq) {
        mu[c.q] = cxd{1.0} / c.k;
        known[c.q] = 1;
        changed = true;
      }
    } else if (c.t == c.q) {
      if (!kp) {
        mu[c.p] = cxd{1.0} / c.k;
        known[c.p] = 1;
        changed = true;
      }
    } else if (c.p == c.q) {
      if (kp && !kt) {
        mu[c.t] = c.k * mu[c.p] * mu[c.p];
        known[c.t] = 1;
        changed = true;
      }
    } else {
      if (kp && kq && !kt) {
        mu[c.t] = c.k * mu[c.p] * mu[c.q];
        known[c.t] = 1;
        changed = true;
      } else if (kt && kp && !kq) {
        mu[c.q] = mu[c.t] / (c.k * mu[c.p]);
        known[c.q] = 1;
        changed = true;
      } else if (kt && kq && !kp) {
        mu[c.p] = mu[c.t] / (c.k * mu[c.q]);
        known[c.p] = 1;
        changed = true;
      }
    }
  }
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (known[x] && !known[sig[x]]) {
      mu[sig[x]] = cxd{1.0} / std::conj(mu[x]);
      known[sig[x]] = 1;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

std::pair<std::vector<int>, std::vector<StarCandidate>> solve_star(
    const Category& cat, const CompiledBasis& basis,
    const WeakHopfAlgebraTable& structure) {
  const int n = basis.size();
  const std::vector<int> sig = star_sigma(cat, basis);
  std::vector<cxd> mu(n, cxd{0.0});
  std::vector<char> known(n, 0);
  for (int c = 0; c < cat.rank(); ++c) {
    for (int dd = 0; dd < cat.rank(); ++dd) {
      const int i = basis.at({cat.unit(), c, c, dd, dd});
      mu[i] = 1.0;
      known[i] = 1;
    }
  }

  // Anti-homomorphism: (e_x e_y)^* = e_y^* e_x^* pins
  //   mu[z] = (L[sig y, sig x, sig z] / conj(L[x,y,z])) mu[x] mu[y];
  // coproduct compatibility pins
  //   mu[x] = (conj(G[x, sig u, sig v]) / G[sig x, u, v]) mu[sig u] mu[sig v].
  std::vector<MuConstraint> cons;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const cxd l = structure.lam(x, y, z);
        if (std::abs(l) > 1e-14) {
          const cxd num = structure.lam(sig[y], sig[x], sig[z]);
          if (std::abs(num) < 1e-14) {
            throw std::runtime_error(
                "star permutation does not preserve the product support");
          }
          cons.push_back({z, num / std::conj(l), x, y});
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const cxd g = structure.gam(sig[x], u, v);
        if (std::abs(g) > 1e-14) {
          const cxd num = std::conj(structure.gam(x, sig[u], sig[v]));
          if (std::abs(num) < 1e-14) {
            throw std::runtime_error(
                "star permutation does not preserve the coproduct support");
          }
          cons.push_back({x, num / g, sig[u], sig[v]});
        }
      }
    }
  }

  while (sweep_mu(cons, sig, mu, known)) {
  }

  // Leftover gauge: one representative per unresolved sigma-orbit.
  std::vector<int> orbits;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!known[i] && !seen[i]) {
      orbits.push_back(i);
      seen[i] = 1;
      seen[sig[i]] = 1;
    }
  }

  std::vector<StarCandidate> candidates;
  const std::size_t total = std::size_t{1} << orbits.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<cxd> m = mu;
    std::vector<char> kn = known;
    std::vector<double> signs(orbits.size());
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
      // Bit 0 of the enumeration order flips the last orbit fastest,
      // matching a lexicographic scan over (+1, -1) per orbit.
      const bool minus = (mask >> (orbits.size() - 1 - oi)) & 1u;
      signs[oi] = minus ? -1.0 : 1.0;
      const int i = orbits[oi];
      const auto& el = basis.elems[i];
      const double dr = cat.dim(el[2]) / cat.dim(el[1]);
      m[i] = signs[oi] * dr;
      kn[i] = 1;
      if (!kn[sig[i]]) {
        m[sig[i]] = cxd{1.0} / std::conj(m[i]);
        kn[sig[i]] = 1;
      }
    }
    while (sweep_mu(cons, sig, m, kn)) {
    }
    if (std::any_of(kn.begin(), kn.end(), [](char c) { return !c; })) continue;
    Mat t = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) t(sig[i], i) = m[i];
    candidates.push_back({std::move(t), std::move(m), std::move(signs)});
  }
  if (candidates.empty()) {
    throw std::runtime_error(
        "star propagation produced no complete assignment");
  }
  return {sig, candidates};
}

StarCandidate solve_star_checked(const Category& cat, const CompiledBasis& basis,
                                 const WeakHopfAlgebraTable& structure,
                                 const Mat& antipode, double tol) {
  auto [sig, candidates] = solve_star(cat, basis, structure);
  (void)sig;
  for (auto& cand : candidates) {
    WeakHopfAlgebraTable table = structure;
    table.antipode = antipode;
    table.star = cand.star;
    if (verify_axioms(table, tol).pass(tol)) return std::move(cand);
  }
  throw std::runtime_error("no star sign assignment passes the axiom battery");
}

WeakHopfAlgebraTable compile_category(const Category& cat, double tol) {
  const CompiledBasis basis = enumerate_basis(cat);
  WeakHopfAlgebraTable table = compile_structure(cat, basis);
  // The stacked system has a structural gauge nullspace; the minimal-norm
  // solution is the antipode, which the axiom battery below confirms
  // (including the composition identity the solve does not impose).
  table.antipode = solve_antipode(table).first;
  table.star = star_closed(cat, basis).first;
  const AxiomReport report = verify_axioms(table, tol);
  if (!report.pass(tol)) {
    std::ostringstream msg;
    msg << "compiled table fails the axiom battery: worst residual "
        << report.max_residual() << " (tolerance " << tol
        << "), Gram min eigenvalue " << report.star_gram_min_eig;
    throw std::runtime_error(msg.str());
  }
  return table;
}

Vec render_multiply(const Category& cat, const CompiledBasis& basis, int x,
                    int y) {
  const auto [a, c1, c2, d1, d2] = basis.elems[x];
  const auto [b, c2p, c3, d2p, d3] = basis.elems[y];
  Vec out = Vec::Zero(basis.size());
  if (c2 != c2p || d2 != d2p) return out;
  for (int g = 0; g < cat.rank(); ++g) {
    // c-side coefficient in the right-associated tree basis, d-side
    // conjugate, then the parallel-strand closure overlap.
    const cxd fc = cat.f(c3, b, a, c1, c2, g);
    const cxd fd = std::conj(cat.f(d3, b, a, d1, d2, g));
    if (std::abs(fc) < 1e-15 || std::abs(fd) < 1e-15) continue;
    if (!(cat.adm(c1, c3, g) && cat.adm(d1, d3, g))) continue;
    out(basis.at({g, c1, c3, d1, d3})) +=
        fc * fd * std::sqrt(cat.dim(b) * cat.dim(a) / cat.dim(g));
  }
  return out;
}

// ==== builtin categories ====================================================

Category fibonacci_category() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double s = 1.0 / std::sqrt(phi);
  // Labels: 0 = unit, 1 = tau.  Only the (tau,tau,tau,tau) block is
  // nontrivial.
  std::map<std::array<int, 6>, cxd> entries;
  entries[{1, 1, 1, 1, 0, 0}] = cxd{1.0 / phi};
  entries[{1, 1, 1, 1, 0, 1}] = cxd{s};
  entries[{1, 1, 1, 1, 1, 0}] = cxd{s};
  entries[{1, 1, 1, 1, 1, 1}] = cxd{-1.0 / phi};
  return Category(fib_ring(), std::move(entries), "fibonacci");
}

Category z2_category(bool twisted) {
  std::map<std::array<int, 6>, cxd> entries;
  if (twisted) {
    // The unique nontrivial 3-cocycle on Z/2: F(1,1,1) = -1; both inner
    // channels are forced to 0.
    entries[{1, 1, 1, 1, 0, 0}] = cxd{-1.0};
  }
  return Category(z2_ring(), std::move(entries),
                  twisted ? "z2.twisted" : "z2");
}

}  // namespace wharf
