#include "wharf/fib.hpp"

#include <cmath>

namespace wharf {

double fib_zeta() { return std::sqrt((std::sqrt(5.0) - 1.0) / 2.0); }

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

int fib_index(int p, int i, int j) {
  if (p == 1) {
    if (i < 1 || i > 2 || j < 1 || j > 2) {
      throw std::invalid_argument("fib_index: block-1 index out of range");
    }
    return (i - 1) * 2 + (j - 1);
  }
  if (p == 2) {
    if (i < 1 || i > 3 || j < 1 || j > 3) {
      throw std::invalid_argument("fib_index: block-2 index out of range");
    }
    return 4 + (i - 1) * 3 + (j - 1);
  }
  throw std::invalid_argument("fib_index: block must be 1 or 2");
}

const std::vector<std::array<int, 3>>& fib_labels() {
  static const std::vector<std::array<int, 3>> labels = {
      {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2},
      {2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {2, 2, 1}, {2, 2, 2}, {2, 2, 3},
      {2, 3, 1}, {2, 3, 2}, {2, 3, 3}};
  return labels;
}

namespace {

std::string label_string(int p, int i, int j) {
  return "e" + std::to_string(p) + "_" + std::to_string(i) + std::to_string(j);
}

/// Builds the table; `flagged` reinstates the four coproduct entries that
/// fail verification, `middle` picks the second tensor factor of the middle
/// term of the coproduct of e_{2,23} (only used when !flagged).
WeakHopfAlgebraTable build_table(bool flagged, int middle) {
  const double z = fib_zeta();
  const double z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
  WeakHopfAlgebraTable A;
  A.init(kFibDim);
  A.name = "fibonacci";
  for (int k = 0; k < kFibDim; ++k) {
    const auto& [p, i, j] = fib_labels()[k];
    A.basis_labels[k] = label_string(p, i, j);
  }

  // ---- multiplication: matrix units within each block ----------------------
  for (const auto& [p, d] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        for (int l = 1; l <= d; ++l) {
          A.lam_ref(fib_index(p, i, j), fib_index(p, j, l),
                    fib_index(p, i, l)) = 1.0;
        }
  }

  // ---- unit and counit -----------------------------------------------------
  for (int k : {fib_index(1, 1, 1), fib_index(1, 2, 2), fib_index(2, 1, 1),
                fib_index(2, 2, 2), fib_index(2, 3, 3)}) {
    A.unit(k) = 1.0;
  }
  for (int k = 0; k < 4; ++k) A.counit(k) = 1.0;

  // ---- star: block transpose ----------------------------------------------
  for (const auto& [p, i, j] : fib_labels()) {
    A.star(fib_index(p, j, i), fib_index(p, i, j)) = 1.0;
  }

  // ---- antipode ------------------------------------------------------------
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      A.antipode(fib_index(1, j, i), fib_index(1, i, j)) = 1.0;
    }
  const int xi[4] = {0, 1, 3, 2};   // 1-based weight exponent per index
  const int pi[4] = {0, 2, 1, 3};   // 1-based index permutation
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      A.antipode(fib_index(2, pi[j], pi[i]), fib_index(2, i, j)) =
          std::pow(z, xi[i] - xi[j]);
    }

  // ---- coproduct -----------------------------------------------------------
  auto I = [](int p, int i, int j) { return fib_index(p, i, j); };
  struct Term {
    int a, b;
    double c;
  };
  std::vector<std::pair<int, std::vector<Term>>> rows;
  rows.push_back({I(1, 1, 1),
                  {{I(1, 1, 1), I(1, 1, 1), 1},
                   {I(2, 1, 1), I(2, 2, 2), 1}}});
  rows.push_back({I(1, 1, 2),
                  {{I(1, 1, 2), I(1, 1, 2), 1},
                   {I(2, 1, 2), I(2, 2, 1), z2},
                   {I(2, 1, 3), I(2, 2, 3), z}}});
  rows.push_back({I(1, 2, 2),
                  {{I(1, 2, 2), I(1, 2, 2), 1},
                   {I(2, 2, 2), flagged ? I(1, 1, 1) : I(2, 1, 1), z4},
                   {I(2, 2, 3), I(2, 1, 3), z3},
                   {I(2, 3, 2), I(2, 3, 1), z3},
                   {I(2, 3, 3), I(2, 3, 3), z2}}});
  rows.push_back({I(2, 1, 1),
                  {{I(1, 1, 1), I(2, 1, 1), 1},
                   {I(2, 1, 1), flagged ? I(1, 1, 1) : I(1, 2, 2), 1},
                   {I(2, 1, 1), I(2, 3, 3), 1}}});
  rows.push_back({I(2, 1, 2),
                  {{I(1, 1, 2), I(2, 1, 2), 1},
                   {I(2, 1, 2), I(1, 2, 1), 1},
                   {I(2, 1, 3), I(2, 3, 2), 1}}});
  rows.push_back({I(2, 1, 3),
                  {{I(1, 1, 2), I(2, 1, 3), 1},
                   {I(2, 1, 3), flagged ? I(2, 2, 2) : I(1, 2, 2), 1},
                   {I(2, 1, 2), I(2, 3, 1), z},
                   {I(2, 1, 3), I(2, 3, 3), -z2}}});
  rows.push_back({I(2, 2, 2),
                  {{I(1, 2, 2), I(2, 2, 2), 1},
                   {I(2, 2, 2), I(1, 1, 1), 1},
                   {I(2, 3, 3), I(2, 2, 2), 1}}});
  rows.push_back({I(2, 2, 3),
                  {{I(1, 2, 2), I(2, 2, 3), 1},
                   {I(2, 2, 3), flagged ? I(2, 1, 2) : middle, 1},
                   {I(2, 3, 2), I(2, 2, 1), z},
                   {I(2, 3, 3), I(2, 2, 3), -z2}}});
  rows.push_back({I(2, 3, 3),
                  {{I(1, 2, 2), I(2, 3, 3), 1},
                   {I(2, 3, 3), I(1, 2, 2), 1},
                   {I(2, 2, 2), I(2, 1, 1), z2},
                   {I(2, 2, 3), I(2, 1, 3), -z3},
                   {I(2, 3, 2), I(2, 3, 1), -z3},
                   {I(2, 3, 3), I(2, 3, 3), z4}}});
  for (const auto& [row, terms] : rows) {
    for (const Term& t : terms) A.gam_ref(row, t.a, t.b) += t.c;
  }

  // The remaining four rows follow from compatibility of the coproduct with
  // the star: Delta(x^*) = Delta(x)^{* (x) *}, entrywise through the star
  // permutation of matrix units.
  std::vector<int> sigma(kFibDim);
  for (int k = 0; k < kFibDim; ++k) {
    const auto& [p, i, j] = fib_labels()[k];
    sigma[k] = fib_index(p, j, i);
  }
  const std::vector<std::pair<int, int>> pairs = {
      {I(1, 1, 2), I(1, 2, 1)},
      {I(2, 1, 2), I(2, 2, 1)},
      {I(2, 1, 3), I(2, 3, 1)},
      {I(2, 2, 3), I(2, 3, 2)}};
  for (const auto& [src, dst] : pairs) {
    for (int a = 0; a < kFibDim; ++a)
      for (int b = 0; b < kFibDim; ++b) {
        A.gam_ref(dst, sigma[a], sigma[b]) = std::conj(A.gam(src, a, b));
      }
  }
  return A;
}

}  // namespace

WeakHopfAlgebraTable build_fib_wha() {
  return build_table(false, fib_index(1, 1, 2));
}

WeakHopfAlgebraTable build_fib_wha_flagged() {
  WeakHopfAlgebraTable A = build_table(true, fib_index(1, 1, 2));
  A.name = "fibonacci.flagged";
  return A;
}

WeakHopfAlgebraTable build_fib_wha_middle(int middle) {
  if (middle < 0 || middle >= kFibDim) {
    throw std::invalid_argument("build_fib_wha_middle: index out of range");
  }
  WeakHopfAlgebraTable A = build_table(false, middle);
  A.name = "fibonacci.variant";
  return A;
}

FibPairing build_fib_pairing() {
  const double z = fib_zeta();
  const double z2 = z * z, z4 = z2 * z2;
  FibPairing P;
  P.r_tilde = Mat::Zero(kFibDim, kFibDim);
  P.r = Mat::Zero(kFibDim, kFibDim);
  auto I = [](int p, int i, int j) { return fib_index(p, i, j); };

  const std::vector<std::pair<int, int>> ones = {
      {I(1, 1, 1), I(1, 1, 1)}, {I(2, 1, 1), I(1, 1, 2)},
      {I(1, 1, 2), I(2, 1, 1)}, {I(2, 2, 2), I(1, 2, 1)},
      {I(1, 2, 1), I(2, 2, 2)}, {I(2, 2, 1), I(2, 2, 1)},
      {I(2, 3, 1), I(2, 2, 3)}, {I(2, 2, 3), I(2, 3, 1)}};
  for (const auto& [up, lo] : ones) P.r_tilde(up, lo) = 1.0;
  P.r_tilde(I(2, 3, 2), I(2, 3, 2)) = 1.0 / z;
  P.r_tilde(I(2, 1, 3), I(2, 1, 3)) = 1.0 / z;
  P.r_tilde(I(2, 1, 2), I(2, 1, 2)) = 1.0 / z2;
  P.r_tilde(I(1, 2, 2), I(2, 3, 3)) = z2;
  P.r_tilde(I(2, 3, 3), I(1, 2, 2)) = z2;
  P.r_tilde(I(2, 3, 3), I(2, 3, 3)) = -z2;
  P.r_tilde(I(1, 2, 2), I(1, 2, 2)) = z4;

  for (const auto& [up, lo] : ones) P.r(up, lo) = 1.0;
  P.r(I(1, 2, 2), I(1, 2, 2)) = 1.0;
  P.r(I(1, 2, 2), I(2, 3, 3)) = 1.0;
  P.r(I(2, 3, 3), I(1, 2, 2)) = 1.0;
  P.r(I(2, 1, 3), I(2, 1, 3)) = z;
  P.r(I(2, 3, 2), I(2, 3, 2)) = z;
  P.r(I(2, 1, 2), I(2, 1, 2)) = z2;
  P.r(I(2, 3, 3), I(2, 3, 3)) = -z2;
  return P;
}

namespace {

/// Matrix-unit layout on C^5: block p = 1 occupies rows 0..1, block p = 2
/// rows 2..4.
std::vector<Mat> matrix_unit_layout() {
  std::vector<Mat> E(kFibDim, Mat::Zero(5, 5));
  for (int k = 0; k < kFibDim; ++k) {
    const auto& [p, i, j] = fib_labels()[k];
    const int off = (p == 1) ? 0 : 2;
    E[k](off + i - 1, off + j - 1) = 1.0;
  }
  return E;
}

}  // namespace

Representation build_phi(const WeakHopfAlgebraTable& fib) {
  return make_representation(fib, matrix_unit_layout());
}

Representation build_psi(const WeakHopfAlgebraTable& fib_dual,
                         const FibPairing& pairing) {
  const std::vector<Mat> E = matrix_unit_layout();
  std::vector<Mat> mats(kFibDim, Mat::Zero(5, 5));
  for (int x = 0; x < kFibDim; ++x) {
    for (int y = 0; y < kFibDim; ++y) {
      const cxd c = pairing.r(x, y);
      if (c != cxd{}) mats[x] += c * E[y];
    }
  }
  return make_representation(fib_dual, std::move(mats));
}

}  // namespace wharf
