#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "wharf/fib.hpp"
#include "wharf/materialize.hpp"
#include "wharf/mpo.hpp"
#include "wharf/rfp.hpp"

using namespace wharf;

namespace {
const double kS5 = std::sqrt(5.0);
const double kPhi = (1.0 + kS5) / 2.0;
}  // namespace

// ==== closed forms ==========================================================

TEST_CASE("local weights and the transfer element take their closed forms") {
  const SymmetrySetup s = fib_setup();
  // Omega = diag(1, 1, phi, phi, phi) / D^2 with the two distinct entries
  // 2/(5 + sqrt 5) and 1/sqrt 5.
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(s.omega(i, i) - cxd{2.0 / (5.0 + kS5)}) < 1e-12);
  }
  for (int i = 2; i < 5; ++i) {
    CHECK(std::abs(s.omega(i, i) - cxd{1.0 / kS5}) < 1e-12);
  }

  // Unit block of the transfer element: [[w1, w2], [w2, w1 + w2]] with
  // w1 = (5 - sqrt 5)/10 and w2 = 1/sqrt 5; the other block vanishes.
  const Mat eth = s.psi_of(s.theta);
  const double w1 = (5.0 - kS5) / 10.0;
  const double w2 = 1.0 / kS5;
  CHECK(std::abs(eth(0, 0) - cxd{w1}) < 1e-12);
  CHECK(std::abs(eth(0, 1) - cxd{w2}) < 1e-12);
  CHECK(std::abs(eth(1, 0) - cxd{w2}) < 1e-12);
  CHECK(std::abs(eth(1, 1) - cxd{w1 + w2}) < 1e-12);
  CHECK(eth.block(2, 2, 3, 3).cwiseAbs().maxCoeff() < 1e-12);
}

// ==== fixed-point diagnostics ===============================================

TEST_CASE("fixed-point diagnostics stay at rounding level") {
  const SymmetrySetup s = fib_setup();
  for (int m = 0; m < 2; ++m) {
    const double expected_nm =
        (m == 0) ? 2.0 / (5.0 + kS5) : 2.0 / (5.0 - kS5);
    for (int len = 1; len <= 3; ++len) {
      CAPTURE(m);
      CAPTURE(len);
      const RfpDiagnostics r = build_rfp(s, m, len);
      CHECK(r.max_residual() < 1e-9);
      CHECK(r.min_eig > -1e-9);
      CHECK(std::abs(r.n_m_expected - expected_nm) < 1e-12);
      CHECK(std::abs(r.n_m - cxd{expected_nm}) < 1e-9);
    }
  }
  CHECK_THROWS_AS((void)build_rfp(s, 2, 1), std::invalid_argument);
}

TEST_CASE("strong-symmetry eigenvalues reproduce the ring characters") {
  const SymmetrySetup s = fib_setup();
  for (int m = 0; m < 2; ++m) {
    for (int len = 2; len <= 3; ++len) {
      CAPTURE(m);
      CAPTURE(len);
      const RfpDiagnostics r = build_rfp(s, m, len);
      const std::vector<cxd> lam = strong_symmetry_spectrum(s, r.rho, len);
      REQUIRE(lam.size() == 2);
      CHECK(std::abs(lam[0] - cxd{1.0}) < 1e-10);
      const double golden = (m == 0) ? kPhi : 1.0 - kPhi;
      CHECK(std::abs(lam[1] - cxd{golden}) < 1e-9);
      CHECK(std::abs(lam[1] - s.characters(m, 1)) < 1e-9);
    }
  }
}

TEST_CASE("sector projectors resolve the unit-label operator") {
  const SymmetrySetup s = fib_setup();
  for (int len = 1; len <= 2; ++len) {
    const Mat sum = build_rfp(s, 0, len).o_pi + build_rfp(s, 1, len).o_pi;
    const Mat unit_op = assemble_dense(label_mpo(s, 0), len);
    CHECK((sum - unit_op).cwiseAbs().maxCoeff() < 1e-10);
  }
}

// ==== reduced states ========================================================

TEST_CASE("one-site reduction follows the dressed boundary closure") {
  const SymmetrySetup s = fib_setup();
  const TraceOutReport rep = check_trace_out(s, 3);
  REQUIRE(rep.corrected.size() == 2);
  for (int m = 0; m < 2; ++m) {
    CAPTURE(m);
    CHECK(rep.corrected[m] < 1e-9);
    // The undressed boundary closes onto a genuinely different state.
    CHECK(rep.naive[m] > 0.1);
  }
  // Both sector reductions coincide.
  CHECK(rep.cross_sector < 1e-9);
}

// ==== purification ==========================================================

TEST_CASE("purification reconstructs the state and is an exact eigenstate") {
  const SymmetrySetup s = fib_setup();
  for (int m = 0; m < 2; ++m) {
    CAPTURE(m);
    const PurificationReport rep = check_purification(s, m, 2);
    CHECK(rep.reconstruction < 1e-9);
    CHECK(rep.mps_match < 1e-10);
    REQUIRE(rep.cs_defect.size() == 2);
    for (int a = 0; a < 2; ++a) {
      CHECK(rep.cs_defect[a] < 1e-9);
      CHECK(std::abs(rep.lambda[a] - s.characters(m, a)) < 1e-9);
    }
  }
}

// ==== dressed transfer spectra ==============================================

TEST_CASE("dressed transfer spectra match the predicted multisets") {
  const SymmetrySetup s = fib_setup();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const ChannelSpectrumReport rep = check_channel_spectrum(s, a, b);
      CHECK(rep.multiset_dev < 1e-8);
      CHECK(rep.unit_multiplicity == rep.expected_multiplicity);
      const int expect = (a == b) ? 1 : 0;  // both labels self-dual
      CHECK(rep.expected_multiplicity == expect);
    }
  }
}

// ==== decomposition route ===================================================

TEST_CASE("materialized setup produces the same fixed-point physics") {
  const SymmetrySetup s = materialize(build_fib_wha(), fib_ring());
  for (int m = 0; m < 2; ++m) {
    const RfpDiagnostics r = build_rfp(s, m, 2);
    CHECK(r.max_residual() < 1e-9);
    const std::vector<cxd> lam = strong_symmetry_spectrum(s, r.rho, 2);
    CHECK(std::abs(lam[0] - cxd{1.0}) < 1e-9);
    const double golden = (m == 0) ? kPhi : 1.0 - kPhi;
    CHECK(std::abs(lam[1] - cxd{golden}) < 1e-9);
  }
  const TraceOutReport rep = check_trace_out(s, 3);
  CHECK(rep.corrected[0] < 1e-9);
  CHECK(rep.corrected[1] < 1e-9);
}
