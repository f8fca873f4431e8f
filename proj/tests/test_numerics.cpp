#include <doctest.h>

#include "wharf/numerics.hpp"

#include <cmath>

using namespace wharf;

namespace {

Mat from_rows(int r, int c, std::initializer_list<double> vals) {
  Mat m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_CASE("kron: shape, values, associativity") {
  const Mat a = from_rows(2, 2, {1, 2, 3, 4});
  const Mat b = from_rows(2, 2, {0, 1, 1, 0});
  const Mat k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 4);
  CHECK(std::abs(k(0, 1) - cxd{1.0}) < 1e-15);
  CHECK(std::abs(k(0, 0)) < 1e-15);
  CHECK(std::abs(k(2, 1) - cxd{3.0}) < 1e-15);

  const Mat c = from_rows(2, 2, {2, 0, 0, 5});
  CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) == 0.0);
}

TEST_CASE("kron: entry cap enforced") {
  const Mat big = Mat::Identity(3000, 3000);
  CHECK_THROWS_AS(kron(big, big), std::invalid_argument);
}

TEST_CASE("eig_spectrum: golden-ratio eigenvalues of [[0,1],[1,1]]") {
  const Mat m = from_rows(2, 2, {0, 1, 1, 1});
  const SpectrumReport rep = eig_spectrum(m);
  REQUIRE(rep.eigenvalues.size() == 2);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double lo = 1e9, hi = -1e9;
  for (const cxd& v : rep.eigenvalues) {
    CHECK(std::abs(v.imag()) < 1e-12);
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  CHECK(std::abs(hi - phi) < 1e-12);
  CHECK(std::abs(lo - (1.0 - phi)) < 1e-12);
  CHECK(rep.residual < 1e-12);
}

TEST_CASE("eig_spectrum: dimension cap and non-square rejection") {
  CHECK_THROWS_AS(eig_spectrum(Mat::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("hermitian_spectrum: real ascending values") {
  Mat m(2, 2);
  m << cxd{2, 0}, cxd{0, 1}, cxd{0, -1}, cxd{2, 0};
  const auto w = hermitian_spectrum(m);
  REQUIRE(w.size() == 2);
  CHECK(std::abs(w[0] - 1.0) < 1e-12);
  CHECK(std::abs(w[1] - 3.0) < 1e-12);
  CHECK(std::abs(min_hermitian_eig(m) - 1.0) < 1e-12);
}

TEST_CASE("partial_trace: product state factorizes") {
  Mat rho_a = from_rows(2, 2, {0.7, 0.1, 0.1, 0.3});
  Mat rho_b = from_rows(3, 3, {0.5, 0, 0, 0, 0.25, 0, 0, 0, 0.25});
  const Mat joint = kron(rho_a, rho_b);
  const Mat out = partial_trace(joint, {2, 3}, 1);
  CHECK(max_abs(out - rho_a * rho_b.trace()) < 1e-14);

  // Composing partial traces over every site yields the scalar trace.
  const Mat once = partial_trace(joint, {2, 3}, 0);
  const Mat twice = partial_trace(once, {3}, 0);
  CHECK(twice.rows() == 1);
  CHECK(std::abs(twice(0, 0) - joint.trace()) < 1e-14);
}

TEST_CASE("partial_trace: middle site of a three-site chain") {
  const Mat a = from_rows(2, 2, {1, 0, 0, 0});
  const Mat b = from_rows(2, 2, {0.5, 0.5, 0.5, 0.5});
  const Mat c = from_rows(2, 2, {0.25, 0, 0, 0.75});
  const Mat joint = kron(kron(a, b), c);
  const Mat out = partial_trace(joint, {2, 2, 2}, 1);
  CHECK(max_abs(out - kron(a, c) * b.trace()) < 1e-14);
}

TEST_CASE("partial_trace: dimension validation") {
  CHECK_THROWS_AS(partial_trace(Mat::Identity(6, 6), {2, 2}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(Mat::Identity(4, 4), {2, 2}, 2),
                  std::invalid_argument);
}

TEST_CASE("frob_residual: value and shape guard") {
  const Mat a = Mat::Identity(2, 2);
  const Mat b = Mat::Zero(2, 2);
  CHECK(std::abs(frob_residual(a, b) - std::sqrt(2.0)) < 1e-14);
  CHECK_THROWS_AS(frob_residual(a, Mat::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("matrix_power matches repeated multiplication") {
  const Mat m = from_rows(2, 2, {0, 1, 1, 1});
  Mat ref = Mat::Identity(2, 2);
  for (int k = 0; k < 9; ++k) ref = ref * m;
  CHECK(max_abs(matrix_power(m, 9) - ref) < 1e-10);
  CHECK(max_abs(matrix_power(m, 0) - Mat::Identity(2, 2)) == 0.0);
}

TEST_CASE("Tensor: strides, bounds, cap") {
  Tensor t({2, 3, 4});
  CHECK(t.size() == 24);
  t.at({1, 2, 3}) = cxd{5.0, -1.0};
  CHECK(t[23] == cxd{5.0, -1.0});
  CHECK_THROWS_AS(t.at({2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Tensor({4096, 4096, 4096}), std::invalid_argument);
}

TEST_CASE("LdSquare: powers agree with double-precision powering") {
  Mat m(3, 3);
  m << cxd{0.3, 0.1}, cxd{0.2, 0}, cxd{0, 0},
       cxd{0.1, 0}, cxd{0.4, -0.2}, cxd{0.1, 0},
       cxd{0, 0.05}, cxd{0, 0}, cxd{0.5, 0};
  const Mat p8 = matrix_power(m, 8);
  const Mat p8l = LdSquare::from(m).pow(8).to_mat();
  CHECK(max_abs(p8 - p8l) < 1e-14);

  const LdSquare l = LdSquare::from(m);
  const cxl tp = l.trace_prod(l);
  const cxd ref = (m * m).trace();
  CHECK(std::abs(cxd{static_cast<double>(tp.real()),
                     static_cast<double>(tp.imag())} - ref) < 1e-15);
}
