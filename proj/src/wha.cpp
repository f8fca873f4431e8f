#include "wharf/wha.hpp"

#include <algorithm>
#include <cmath>

namespace wharf {

namespace {

using Flat = std::vector<cxd>;

double max_abs_diff(const Flat& a, const Flat& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

// ==== table =================================================================

void WeakHopfAlgebraTable::init(int n) {
  if (n <= 0) throw std::invalid_argument("WeakHopfAlgebraTable: bad dim");
  dim = n;
  basis_labels.resize(n);
  for (int i = 0; i < n; ++i) basis_labels[i] = "b" + std::to_string(i);
  const std::size_t n3 =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * n;
  mult.assign(n3, cxd{0.0, 0.0});
  comult.assign(n3, cxd{0.0, 0.0});
  unit = Vec::Zero(n);
  counit = Vec::Zero(n);
  antipode = Mat::Zero(n, n);
  star = Mat::Zero(n, n);
}

void WeakHopfAlgebraTable::validate_shapes() const {
  const std::size_t n = static_cast<std::size_t>(dim);
  if (dim <= 0) throw std::invalid_argument("table: non-positive dim");
  if (basis_labels.size() != n) {
    throw std::invalid_argument("table: label count disagrees with dim");
  }
  if (mult.size() != n * n * n || comult.size() != n * n * n) {
    throw std::invalid_argument("table: structure tensor size mismatch");
  }
  if (unit.size() != dim || counit.size() != dim) {
    throw std::invalid_argument("table: unit/counit size mismatch");
  }
  if (antipode.rows() != dim || antipode.cols() != dim ||
      star.rows() != dim || star.cols() != dim) {
    throw std::invalid_argument("table: antipode/star shape mismatch");
  }
  for (const cxd& v : mult) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("table: non-finite mult entry");
    }
  }
  for (const cxd& v : comult) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("table: non-finite comult entry");
    }
  }
  require_finite(antipode, "table antipode");
  require_finite(star, "table star");
}

// ==== axiom report ==========================================================

double AxiomReport::max_residual() const {
  double worst = 0.0;
  for (const auto& [name, r] : residuals) worst = std::max(worst, r);
  return worst;
}

double AxiomReport::get(const std::string& axiom_name) const {
  for (const auto& [name, r] : residuals) {
    if (name == axiom_name) return r;
  }
  throw std::invalid_argument("AxiomReport: unknown axiom " + axiom_name);
}

bool AxiomReport::pass(double tol) const {
  return max_residual() <= tol && star_gram_min_eig > 0.0;
}

// ==== axiom verification ====================================================

AxiomReport verify_axioms(const WeakHopfAlgebraTable& alg, double /*tol*/) {
  alg.validate_shapes();
  const int n = alg.dim;
  const std::size_t un = static_cast<std::size_t>(n);
  const auto& L = alg.mult;
  const auto& G = alg.comult;
  const Vec& u = alg.unit;
  const Vec& eps = alg.counit;
  const Mat& S = alg.antipode;
  const Mat& T = alg.star;

  auto i3 = [un](int a, int b, int c) { return (a * un + b) * un + c; };
  auto i4 = [un](int a, int b, int c, int d) {
    return ((a * un + b) * un + c) * un + d;
  };
  auto i5 = [un](int a, int b, int c, int d, int e) {
    return (((a * un + b) * un + c) * un + d) * un + e;
  };
  const std::size_t n2 = un * un, n3 = n2 * un, n4 = n3 * un, n5 = n4 * un;

  AxiomReport rep;
  auto push = [&rep](const std::string& name, double r) {
    rep.residuals.emplace_back(name, r);
  };

  // ---- associativity: (e_x e_y) e_z == e_x (e_y e_z) -----------------------
  {
    Flat lhs(n4), rhs(n4);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int w = 0; w < n; ++w) {
          const cxd c = L[i3(x, y, w)];
          if (c == cxd{}) continue;
          for (int z = 0; z < n; ++z)
            for (int v = 0; v < n; ++v) lhs[i4(x, y, z, v)] += c * L[i3(w, z, v)];
        }
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          const cxd c = L[i3(y, z, w)];
          if (c == cxd{}) continue;
          for (int x = 0; x < n; ++x)
            for (int v = 0; v < n; ++v) rhs[i4(x, y, z, v)] += c * L[i3(x, w, v)];
        }
    push("associativity", max_abs_diff(lhs, rhs));
  }

  // ---- unit: 1 . e_y == e_y == e_y . 1 -------------------------------------
  {
    double worst = 0.0;
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        cxd left = 0.0, right = 0.0;
        for (int x = 0; x < n; ++x) {
          left += u(x) * L[i3(x, y, z)];
          right += u(x) * L[i3(y, x, z)];
        }
        const cxd target = (y == z) ? cxd{1.0, 0.0} : cxd{0.0, 0.0};
        worst = std::max({worst, std::abs(left - target), std::abs(right - target)});
      }
    push("unit", worst);
  }

  // ---- coassociativity -----------------------------------------------------
  {
    Flat lhs(n4), rhs(n4);
    for (int z = 0; z < n; ++z)
      for (int a = 0; a < n; ++a)
        for (int w = 0; w < n; ++w) {
          const cxd c = G[i3(z, a, w)];
          if (c == cxd{}) continue;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) lhs[i4(z, x, y, w)] += c * G[i3(a, x, y)];
        }
    for (int z = 0; z < n; ++z)
      for (int x = 0; x < n; ++x)
        for (int b = 0; b < n; ++b) {
          const cxd c = G[i3(z, x, b)];
          if (c == cxd{}) continue;
          for (int y = 0; y < n; ++y)
            for (int w = 0; w < n; ++w) rhs[i4(z, x, y, w)] += c * G[i3(b, y, w)];
        }
    push("coassociativity", max_abs_diff(lhs, rhs));
  }

  // ---- counit: (eps (x) id) Delta == id == (id (x) eps) Delta --------------
  {
    double worst = 0.0;
    for (int z = 0; z < n; ++z)
      for (int y = 0; y < n; ++y) {
        cxd left = 0.0, right = 0.0;
        for (int x = 0; x < n; ++x) {
          left += G[i3(z, x, y)] * eps(x);
          right += G[i3(z, y, x)] * eps(x);
        }
        const cxd target = (z == y) ? cxd{1.0, 0.0} : cxd{0.0, 0.0};
        worst = std::max({worst, std::abs(left - target), std::abs(right - target)});
      }
    push("counit", worst);
  }

  // ---- multiplicativity of the coproduct -----------------------------------
  {
    Flat lhs(n4);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const cxd c = L[i3(x, y, z)];
          if (c == cxd{}) continue;
          for (int uu = 0; uu < n; ++uu)
            for (int v = 0; v < n; ++v) lhs[i4(x, y, uu, v)] += c * G[i3(z, uu, v)];
        }
    // rhs[x,y,u,v] = sum_{a,b,c,d} G[x,a,b] G[y,c,d] L[a,c,u] L[b,d,v]
    Flat r1(n4);  // r1[x,b,c,u] = sum_a G[x,a,b] L[a,c,u]
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const cxd c = G[i3(x, a, b)];
          if (c == cxd{}) continue;
          for (int cc = 0; cc < n; ++cc)
            for (int uu = 0; uu < n; ++uu)
              r1[i4(x, b, cc, uu)] += c * L[i3(a, cc, uu)];
        }
    Flat r2(n5);  // r2[x,b,u,y,d] = sum_c r1[x,b,c,u] G[y,c,d]
    for (int y = 0; y < n; ++y)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d) {
          const cxd c = G[i3(y, cc, d)];
          if (c == cxd{}) continue;
          for (int x = 0; x < n; ++x)
            for (int b = 0; b < n; ++b)
              for (int uu = 0; uu < n; ++uu)
                r2[i5(x, b, uu, y, d)] += r1[i4(x, b, cc, uu)] * c;
        }
    Flat rhs(n4);  // rhs[x,y,u,v] = sum_{b,d} r2[x,b,u,y,d] L[b,d,v]
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int v = 0; v < n; ++v) {
          const cxd c = L[i3(b, d, v)];
          if (c == cxd{}) continue;
          for (int x = 0; x < n; ++x)
            for (int uu = 0; uu < n; ++uu)
              for (int y = 0; y < n; ++y)
                rhs[i4(x, y, uu, v)] += r2[i5(x, b, uu, y, d)] * c;
        }
    push("comult_multiplicative", max_abs_diff(lhs, rhs));
  }

  // Shared pieces: Delta(1) and (id (x) eps . mult).
  Mat d1 = Mat::Zero(n, n);  // d1[a,b] = coeff of e_a (x) e_b in Delta(1)
  for (int z = 0; z < n; ++z) {
    if (u(z) == cxd{}) continue;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d1(a, b) += u(z) * G[i3(z, a, b)];
  }
  Mat m2 = Mat::Zero(n, n);  // m2[x,y] = eps(e_x e_y)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      cxd acc = 0.0;
      for (int z = 0; z < n; ++z) acc += L[i3(x, y, z)] * eps(z);
      m2(x, y) = acc;
    }

  // ---- weakened unit compatibility -----------------------------------------
  {
    // d2u[x,y,b] = sum_a d1[a,b] G[a,x,y]   (the 3-fold coproduct of 1)
    Flat d2u(n3);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const cxd c = d1(a, b);
        if (c == cxd{}) continue;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) d2u[i3(x, y, b)] += c * G[i3(a, x, y)];
      }
    Flat A(n3), B(n3);  // (Delta(1) (x) 1) and (1 (x) Delta(1))
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          A[i3(a, b, c)] = d1(a, b) * u(c);
          B[i3(a, b, c)] = u(a) * d1(b, c);
        }
    // Componentwise product in the triple tensor power:
    // mul3(P,Q)[z1,z2,z3] = sum P[a,b,c] Q[y1,y2,y3] L[a,y1,z1] L[b,y2,z2]
    //                            L[c,y3,z3]
    auto mul3 = [&](const Flat& P, const Flat& Q) {
      Flat a1(n4);  // a1[b,c,z1,y1] = sum_a P[a,b,c] L[a,y1,z1]
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            const cxd p = P[i3(a, b, c)];
            if (p == cxd{}) continue;
            for (int y1 = 0; y1 < n; ++y1)
              for (int z1 = 0; z1 < n; ++z1)
                a1[i4(b, c, z1, y1)] += p * L[i3(a, y1, z1)];
          }
      Flat u1(n5);  // u1[b,c,z1,y2,y3] = sum_{y1} a1[b,c,z1,y1] Q[y1,y2,y3]
      for (int y1 = 0; y1 < n; ++y1)
        for (int y2 = 0; y2 < n; ++y2)
          for (int y3 = 0; y3 < n; ++y3) {
            const cxd q = Q[i3(y1, y2, y3)];
            if (q == cxd{}) continue;
            for (int b = 0; b < n; ++b)
              for (int c = 0; c < n; ++c)
                for (int z1 = 0; z1 < n; ++z1)
                  u1[i5(b, c, z1, y2, y3)] += a1[i4(b, c, z1, y1)] * q;
          }
      Flat a2(n4);  // a2[c,z1,y3,z2] = sum_{b,y2} u1[b,c,z1,y2,y3] L[b,y2,z2]
      for (int b = 0; b < n; ++b)
        for (int y2 = 0; y2 < n; ++y2)
          for (int z2 = 0; z2 < n; ++z2) {
            const cxd c2 = L[i3(b, y2, z2)];
            if (c2 == cxd{}) continue;
            for (int c = 0; c < n; ++c)
              for (int z1 = 0; z1 < n; ++z1)
                for (int y3 = 0; y3 < n; ++y3)
                  a2[i4(c, z1, y3, z2)] += u1[i5(b, c, z1, y2, y3)] * c2;
          }
      Flat out(n3);  // out[z1,z2,z3] = sum_{c,y3} a2[c,z1,y3,z2] L[c,y3,z3]
      for (int c = 0; c < n; ++c)
        for (int y3 = 0; y3 < n; ++y3)
          for (int z3 = 0; z3 < n; ++z3) {
            const cxd c3 = L[i3(c, y3, z3)];
            if (c3 == cxd{}) continue;
            for (int z1 = 0; z1 < n; ++z1)
              for (int z2 = 0; z2 < n; ++z2)
                out[i3(z1, z2, z3)] += a2[i4(c, z1, y3, z2)] * c3;
          }
      return out;
    };
    const Flat ab = mul3(A, B);
    const Flat ba = mul3(B, A);
    push("weak_unit",
         std::max(max_abs_diff(d2u, ab), max_abs_diff(d2u, ba)));
  }

  // ---- weakened counit compatibility ---------------------------------------
  {
    Flat m3(n3), rhs1(n3), rhs2(n3);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int w = 0; w < n; ++w) {
          const cxd c = L[i3(x, y, w)];
          if (c == cxd{}) continue;
          for (int z = 0; z < n; ++z) m3[i3(x, y, z)] += c * m2(w, z);
        }
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const cxd c = G[i3(y, a, b)];
          if (c == cxd{}) continue;
          for (int x = 0; x < n; ++x)
            for (int z = 0; z < n; ++z) {
              rhs1[i3(x, y, z)] += c * m2(x, a) * m2(b, z);
              rhs2[i3(x, y, z)] += c * m2(x, b) * m2(a, z);
            }
        }
    push("weak_counit",
         std::max(max_abs_diff(m3, rhs1), max_abs_diff(m3, rhs2)));
  }

  // ---- antipode identities -------------------------------------------------
  {
    Mat eps_t = Mat::Zero(n, n);  // eps_t[x,a] = sum_b d1[a,b] m2[x,b]
    Mat eps_s = Mat::Zero(n, n);  // eps_s[x,b] = sum_a d1[a,b] m2[a,x]
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < n; ++a) {
        cxd acc = 0.0;
        for (int b = 0; b < n; ++b) acc += d1(a, b) * m2(x, b);
        eps_t(x, a) = acc;
      }
    for (int x = 0; x < n; ++x)
      for (int b = 0; b < n; ++b) {
        cxd acc = 0.0;
        for (int a = 0; a < n; ++a) acc += d1(a, b) * m2(a, x);
        eps_s(x, b) = acc;
      }

    // a1[x,v] = sum_{a,b,z} G[x,a,b] S[z,a] L[z,b,v]  (compare eps_t)
    {
      Flat c1(n3);  // c1[x,b,z] = sum_a G[x,a,b] S[z,a]
      for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const cxd c = G[i3(x, a, b)];
            if (c == cxd{}) continue;
            for (int z = 0; z < n; ++z) c1[i3(x, b, z)] += c * S(z, a);
          }
      Mat a1 = Mat::Zero(n, n);
      for (int z = 0; z < n; ++z)
        for (int b = 0; b < n; ++b)
          for (int v = 0; v < n; ++v) {
            const cxd c = L[i3(z, b, v)];
            if (c == cxd{}) continue;
            for (int x = 0; x < n; ++x) a1(x, v) += c1[i3(x, b, z)] * c;
          }
      push("antipode_left", max_abs(a1 - eps_t));
    }

    // a2[x,v] = sum_{a,b,z} G[x,a,b] S[z,b] L[a,z,v]  (compare eps_s)
    {
      Flat c2(n3);  // c2[x,a,z] = sum_b G[x,a,b] S[z,b]
      for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const cxd c = G[i3(x, a, b)];
            if (c == cxd{}) continue;
            for (int z = 0; z < n; ++z) c2[i3(x, a, z)] += c * S(z, b);
          }
      Mat a2 = Mat::Zero(n, n);
      for (int a = 0; a < n; ++a)
        for (int z = 0; z < n; ++z)
          for (int v = 0; v < n; ++v) {
            const cxd c = L[i3(a, z, v)];
            if (c == cxd{}) continue;
            for (int x = 0; x < n; ++x) a2(x, v) += c2[i3(x, a, z)] * c;
          }
      push("antipode_right", max_abs(a2 - eps_s));
    }

    // a3: m (S (x) id (x) S) Delta2 == S, evaluated columnwise.
    {
      Flat d2(n4);  // d2[z,x,y,b] = sum_a G[z,a,b] G[a,x,y]
      for (int z = 0; z < n; ++z)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const cxd c = G[i3(z, a, b)];
            if (c == cxd{}) continue;
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y) d2[i4(z, x, y, b)] += c * G[i3(a, x, y)];
          }
      Flat t1(n4);  // t1[z,y,b,p] = sum_x d2[z,x,y,b] S[p,x]
      for (int z = 0; z < n; ++z)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            for (int b = 0; b < n; ++b) {
              const cxd c = d2[i4(z, x, y, b)];
              if (c == cxd{}) continue;
              for (int p = 0; p < n; ++p) t1[i4(z, y, b, p)] += c * S(p, x);
            }
      Flat t2(n4);  // t2[z,y,p,r] = sum_b t1[z,y,b,p] S[r,b]
      for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y)
          for (int b = 0; b < n; ++b)
            for (int p = 0; p < n; ++p) {
              const cxd c = t1[i4(z, y, b, p)];
              if (c == cxd{}) continue;
              for (int r = 0; r < n; ++r) t2[i4(z, y, p, r)] += c * S(r, b);
            }
      Flat t3(n3);  // t3[z,r,w] = sum_{p,y} t2[z,y,p,r] L[p,y,w]
      for (int p = 0; p < n; ++p)
        for (int y = 0; y < n; ++y)
          for (int w = 0; w < n; ++w) {
            const cxd c = L[i3(p, y, w)];
            if (c == cxd{}) continue;
            for (int z = 0; z < n; ++z)
              for (int r = 0; r < n; ++r) t3[i3(z, r, w)] += t2[i4(z, y, p, r)] * c;
          }
      Mat a3 = Mat::Zero(n, n);
      for (int w = 0; w < n; ++w)
        for (int r = 0; r < n; ++r)
          for (int v = 0; v < n; ++v) {
            const cxd c = L[i3(w, r, v)];
            if (c == cxd{}) continue;
            for (int z = 0; z < n; ++z) a3(z, v) += t3[i3(z, r, w)] * c;
          }
      push("antipode_middle", max_abs(a3 - Mat(S.transpose())));
    }
  }

  // ---- star axioms ---------------------------------------------------------
  {
    push("star_involution",
         max_abs(T * T.conjugate() - Mat::Identity(n, n)));

    // (e_x e_y)^* == e_y^* e_x^*
    Flat lhs(n3), rhs(n3);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const cxd c = std::conj(L[i3(x, y, z)]);
          if (c == cxd{}) continue;
          for (int w = 0; w < n; ++w) lhs[i3(x, y, w)] += c * T(w, z);
        }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int w = 0; w < n; ++w) {
          const cxd c = L[i3(a, b, w)];
          if (c == cxd{}) continue;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) rhs[i3(x, y, w)] += T(a, y) * T(b, x) * c;
        }
    push("star_antihomomorphism", max_abs_diff(lhs, rhs));

    // Delta(x^*) == Delta(x)^{* (x) *}
    Flat clhs(n3), crhs(n3);
    for (int z = 0; z < n; ++z)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const cxd c = G[i3(z, a, b)];
          if (c == cxd{}) continue;
          for (int x = 0; x < n; ++x) clhs[i3(x, a, b)] += T(z, x) * c;
        }
    for (int x = 0; x < n; ++x)
      for (int uu = 0; uu < n; ++uu)
        for (int v = 0; v < n; ++v) {
          const cxd c = std::conj(G[i3(x, uu, v)]);
          if (c == cxd{}) continue;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) crhs[i3(x, a, b)] += c * T(a, uu) * T(b, v);
        }
    push("star_cohomomorphism", max_abs_diff(clhs, crhs));
  }

  // ---- positivity of the regular-trace Gram form ---------------------------
  {
    const Mat gram = star_gram(alg);
    push("star_gram_hermitian", max_abs(gram - Mat(gram.adjoint())));
    rep.star_gram_min_eig = min_hermitian_eig(gram);
  }

  return rep;
}

// ==== derived structures ====================================================

Vec multiply(const WeakHopfAlgebraTable& alg, const Vec& a, const Vec& b) {
  const int n = alg.dim;
  if (a.size() != n || b.size() != n) {
    throw std::invalid_argument("multiply: coordinate size mismatch");
  }
  Vec out = Vec::Zero(n);
  for (int x = 0; x < n; ++x) {
    if (a(x) == cxd{}) continue;
    for (int y = 0; y < n; ++y) {
      const cxd c = a(x) * b(y);
      if (c == cxd{}) continue;
      for (int z = 0; z < n; ++z) out(z) += c * alg.lam(x, y, z);
    }
  }
  return out;
}

Tensor comultiply(const WeakHopfAlgebraTable& alg, const Vec& v, int n_legs) {
  const int n = alg.dim;
  if (v.size() != n) {
    throw std::invalid_argument("comultiply: coordinate size mismatch");
  }
  if (n_legs < 1) throw std::invalid_argument("comultiply: need n >= 1");
  Tensor cur(std::vector<int>(1, n));
  for (int x = 0; x < n; ++x) cur[x] = v(x);
  for (int k = 1; k < n_legs; ++k) {
    Tensor next(std::vector<int>(k + 1, n));
    const std::size_t tail = cur.size() / static_cast<std::size_t>(n);
    // Expand the leftmost leg: next[u1,u2,tail] = sum_a G[a,u1,u2] cur[a,tail]
    for (int a = 0; a < n; ++a)
      for (int u1 = 0; u1 < n; ++u1)
        for (int u2 = 0; u2 < n; ++u2) {
          const cxd g = alg.gam(a, u1, u2);
          if (g == cxd{}) continue;
          const std::size_t src = static_cast<std::size_t>(a) * tail;
          const std::size_t dst =
              (static_cast<std::size_t>(u1) * n + u2) * tail;
          for (std::size_t t = 0; t < tail; ++t) {
            next[dst + t] += g * cur[src + t];
          }
        }
    cur = std::move(next);
  }
  return cur;
}

Vec regular_trace(const WeakHopfAlgebraTable& alg) {
  Vec phi = Vec::Zero(alg.dim);
  for (int x = 0; x < alg.dim; ++x) {
    cxd acc = 0.0;
    for (int y = 0; y < alg.dim; ++y) acc += alg.lam(x, y, y);
    phi(x) = acc;
  }
  return phi;
}

Mat star_gram(const WeakHopfAlgebraTable& alg) {
  const int n = alg.dim;
  const Vec phi = regular_trace(alg);
  Mat gram = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cxd acc = 0.0;
      for (int z = 0; z < n; ++z) acc += alg.lam(a, b, z) * phi(z);
      if (acc == cxd{}) continue;
      for (int x = 0; x < n; ++x) gram(x, b) += alg.star(a, x) * acc;
    }
  return gram;
}

WeakHopfAlgebraTable dual(const WeakHopfAlgebraTable& alg) {
  alg.validate_shapes();
  const int n = alg.dim;
  Eigen::FullPivLU<Mat> lu(alg.antipode);
  lu.setThreshold(1e-10);
  if (lu.rank() < n) {
    throw std::invalid_argument(
        "dual: antipode is singular; the dual star structure is undefined");
  }
  WeakHopfAlgebraTable d;
  d.init(n);
  d.name = alg.name.empty() ? "dual" : alg.name + ".dual";
  for (int i = 0; i < n; ++i) d.basis_labels[i] = "d." + alg.basis_labels[i];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        d.lam_ref(x, y, z) = alg.gam(z, x, y);
        d.gam_ref(z, x, y) = alg.lam(x, y, z);
      }
  d.unit = alg.counit;
  d.counit = alg.unit;
  d.antipode = alg.antipode.transpose();
  d.star = alg.antipode.transpose() * alg.star.conjugate().transpose();
  return d;
}

// ==== representations =======================================================

Mat Representation::act(const Vec& v) const {
  if (v.size() != static_cast<Eigen::Index>(mats.size())) {
    throw std::invalid_argument("Representation::act: size mismatch");
  }
  Mat out = Mat::Zero(dim, dim);
  for (int x = 0; x < static_cast<int>(mats.size()); ++x) {
    if (v(x) != cxd{}) out += v(x) * mats[x];
  }
  return out;
}

Representation make_representation(const WeakHopfAlgebraTable& alg,
                                   std::vector<Mat> mats, double hom_tol) {
  const int n = alg.dim;
  if (static_cast<int>(mats.size()) != n) {
    throw std::invalid_argument("make_representation: need one matrix per basis element");
  }
  const int d = static_cast<int>(mats.empty() ? 0 : mats[0].rows());
  for (const Mat& m : mats) {
    if (m.rows() != d || m.cols() != d) {
      throw std::invalid_argument("make_representation: matrices must share a square shape");
    }
  }
  Representation rep;
  rep.algebra = &alg;
  rep.dim = d;
  rep.mats = std::move(mats);

  double hom = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Mat target = Mat::Zero(d, d);
      for (int z = 0; z < n; ++z) {
        const cxd c = alg.lam(x, y, z);
        if (c != cxd{}) target += c * rep.mats[z];
      }
      hom = std::max(hom, max_abs(rep.mats[x] * rep.mats[y] - target));
    }
  rep.hom_residual = hom;
  if (hom > hom_tol) {
    throw std::invalid_argument(
        "make_representation: homomorphism residual " + std::to_string(hom) +
        " exceeds tolerance");
  }

  double star = 0.0;
  for (int x = 0; x < n; ++x) {
    Mat target = Mat::Zero(d, d);
    for (int z = 0; z < n; ++z) {
      const cxd c = alg.star(z, x);
      if (c != cxd{}) target += c * rep.mats[z];
    }
    star = std::max(star, max_abs(target - Mat(rep.mats[x].adjoint())));
  }
  rep.star_residual = star;
  rep.is_star = star <= hom_tol;

  rep.unit_residual = max_abs(rep.act(alg.unit) - Mat::Identity(d, d));
  rep.is_unital = rep.unit_residual <= hom_tol;

  // Faithfulness: rank of the n x d^2 coefficient matrix.
  Mat flat(n, static_cast<Eigen::Index>(d) * d);
  for (int x = 0; x < n; ++x) {
    Eigen::Index k = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) flat(x, k++) = rep.mats[x](i, j);
  }
  Eigen::JacobiSVD<Mat> svd(flat);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-8 * std::max(1.0, sv(0))) ++rank;
  }
  rep.is_faithful = (rank == n);
  return rep;
}

Representation monoidal_product(const Representation& r1,
                                const Representation& r2,
                                std::size_t entry_cap) {
  if (r1.algebra == nullptr || r1.algebra != r2.algebra) {
    throw std::invalid_argument("monoidal_product: representations must share an algebra");
  }
  const WeakHopfAlgebraTable& alg = *r1.algebra;
  const int n = alg.dim;
  const std::size_t dd =
      static_cast<std::size_t>(r1.dim) * static_cast<std::size_t>(r2.dim);
  if (dd * dd > entry_cap) {
    throw std::invalid_argument("monoidal_product: result exceeds the dense entry cap");
  }
  std::vector<Mat> mats(n, Mat::Zero(dd, dd));
  for (int x = 0; x < n; ++x)
    for (int uu = 0; uu < n; ++uu)
      for (int v = 0; v < n; ++v) {
        const cxd g = alg.gam(x, uu, v);
        if (g != cxd{}) mats[x] += g * kron(r1.mats[uu], r2.mats[v], entry_cap);
      }
  return make_representation(alg, std::move(mats));
}

IrrepDecomposition decompose(const Representation& rep,
                             const std::vector<Representation>& irreps,
                             double tol, double svd_tol) {
  const WeakHopfAlgebraTable& alg = *rep.algebra;
  const int n = alg.dim;
  const int D = rep.dim;
  IrrepDecomposition out;

  std::vector<Mat> reconstruction(n, Mat::Zero(D, D));
  for (int c = 0; c < static_cast<int>(irreps.size()); ++c) {
    const Representation& pi = irreps[c];
    if (pi.algebra != rep.algebra) {
      throw std::invalid_argument("decompose: mismatched algebras");
    }
    const int dc = pi.dim;
    // Intertwiner system: W rep(e_x) = pi(e_x) W for a dc x D unknown W.
    Mat M = Mat::Zero(static_cast<Eigen::Index>(n) * dc * D,
                      static_cast<Eigen::Index>(dc) * D);
    for (int x = 0; x < n; ++x) {
      for (int i = 0; i < dc; ++i)
        for (int j = 0; j < D; ++j) {
          const Eigen::Index row =
              (static_cast<Eigen::Index>(x) * dc + i) * D + j;
          for (int l = 0; l < D; ++l) {
            M(row, static_cast<Eigen::Index>(i) * D + l) += rep.mats[x](l, j);
          }
          for (int k = 0; k < dc; ++k) {
            M(row, static_cast<Eigen::Index>(k) * D + j) -= pi.mats[x](i, k);
          }
        }
    }
    Eigen::BDCSVD<Mat> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() ? std::max(1.0, sv(0)) : 1.0;
    std::vector<Mat> inters;
    for (Eigen::Index k = 0; k < M.cols(); ++k) {
      const double s = (k < sv.size()) ? sv(k) : 0.0;
      if (s < svd_tol * scale) {
        Mat W(dc, D);
        for (int i = 0; i < dc; ++i)
          for (int l = 0; l < D; ++l) {
            W(i, l) = svd.matrixV()(static_cast<Eigen::Index>(i) * D + l, k);
          }
        inters.push_back(W);
      }
    }
    // Gram-Schmidt in the intertwiner inner product <A,B> = tr(A B^dag)/dc.
    std::vector<Mat> ortho;
    for (Mat W : inters) {
      for (const Mat& U : ortho) {
        const cxd overlap = (W * U.adjoint()).trace() / static_cast<double>(dc);
        W -= overlap * U;
      }
      const double nrm =
          std::sqrt(std::abs((W * W.adjoint()).trace().real()) / dc);
      if (nrm > 1e-10) ortho.push_back(W / nrm);
    }
    const int mult = static_cast<int>(ortho.size());
    if (mult == 0) continue;

    IrrepBlock block;
    block.irrep_id = c;
    block.multiplicity = mult;
    block.isometry = Mat(D, static_cast<Eigen::Index>(mult) * dc);
    for (int k = 0; k < mult; ++k) {
      block.isometry.block(0, static_cast<Eigen::Index>(k) * dc, D, dc) =
          ortho[k].adjoint();
    }
    for (int x = 0; x < n; ++x) {
      for (int k = 0; k < mult; ++k) {
        const Mat Vk = ortho[k].adjoint();  // D x dc
        reconstruction[x] += Vk * pi.mats[x] * Vk.adjoint();
      }
    }
    out.blocks.push_back(std::move(block));
  }

  double worst = 0.0;
  for (int x = 0; x < n; ++x) {
    worst = std::max(worst, max_abs(rep.mats[x] - reconstruction[x]));
  }
  out.residual = worst;
  if (worst > tol) {
    throw std::runtime_error(
        "decompose: candidate irreps fail to reconstruct the module "
        "(residual " + std::to_string(worst) + ")");
  }
  return out;
}

}  // namespace wharf
