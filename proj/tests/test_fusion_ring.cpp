#include <doctest.h>

#include <cmath>

#include "wharf/errors.hpp"
#include "wharf/fusion_ring.hpp"

using namespace wharf;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("golden-ratio ring validates and has the expected fusion matrix") {
  const FusionRingData ring = fib_ring();
  CHECK(ring.rank() == 2);
  CHECK(ring.unit == 0);
  CHECK(ring.dual[0] == 0);
  CHECK(ring.dual[1] == 1);
  const Mat m = fusion_matrix(ring, 1);
  CHECK(m(0, 0) == cxd{0.0});
  CHECK(m(1, 0) == cxd{1.0});
  CHECK(m(0, 1) == cxd{1.0});
  CHECK(m(1, 1) == cxd{1.0});
}

TEST_CASE("Frobenius-Perron dimensions of the two builtin rings") {
  const auto dims_fib = fp_dimensions(fib_ring());
  CHECK(std::abs(dims_fib[0] - 1.0) < 1e-12);
  CHECK(std::abs(dims_fib[1] - kPhi) < 1e-12);
  const auto dims_z2 = fp_dimensions(z2_ring());
  CHECK(std::abs(dims_z2[0] - 1.0) < 1e-12);
  CHECK(std::abs(dims_z2[1] - 1.0) < 1e-12);
}

TEST_CASE("characters of the golden-ratio ring are the two root fields") {
  const Mat chi = ring_characters(fib_ring());
  REQUIRE(chi.rows() == 2);
  // Frobenius-Perron row first.
  CHECK(std::abs(chi(0, 0) - cxd{1.0}) < 1e-10);
  CHECK(std::abs(chi(0, 1) - cxd{kPhi}) < 1e-10);
  CHECK(std::abs(chi(1, 0) - cxd{1.0}) < 1e-10);
  CHECK(std::abs(chi(1, 1) - cxd{1.0 - kPhi}) < 1e-10);
}

TEST_CASE("characters of the parity ring are the two signs") {
  const Mat chi = ring_characters(z2_ring());
  CHECK(std::abs(chi(0, 0) - cxd{1.0}) < 1e-10);
  CHECK(std::abs(chi(0, 1) - cxd{1.0}) < 1e-10);
  CHECK(std::abs(chi(1, 0) - cxd{1.0}) < 1e-10);
  CHECK(std::abs(chi(1, 1) - cxd{-1.0}) < 1e-10);
}

TEST_CASE("characters satisfy the product rule against the structure constants") {
  for (const auto& ring : {fib_ring(), z2_ring()}) {
    const Mat chi = ring_characters(ring);
    const int r = ring.rank();
    for (int m = 0; m < r; ++m) {
      for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
          cxd rhs = 0.0;
          for (int c = 0; c < r; ++c) {
            rhs += static_cast<double>(ring.n(a, b, c)) * chi(m, c);
          }
          CHECK(std::abs(chi(m, a) * chi(m, b) - rhs) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("validate_ring rejects broken tables") {
  SUBCASE("associativity violation") {
    FusionRingData ring = fib_ring();
    ring.n_ref(1, 1, 0) = 0;  // tau * tau loses its unit channel
    CHECK_THROWS_AS(validate_ring(ring), std::invalid_argument);
  }
  SUBCASE("dual map not an involution") {
    FusionRingData ring = fib_ring();
    ring.dual = {1, 1};
    CHECK_THROWS_AS(validate_ring(ring), std::invalid_argument);
  }
  SUBCASE("unit law violation") {
    FusionRingData ring = z2_ring();
    ring.n_ref(0, 1, 0) = 1;  // unit * 1 gains a spurious channel
    CHECK_THROWS_AS(validate_ring(ring), std::invalid_argument);
  }
  SUBCASE("negative multiplicity") {
    FusionRingData ring = z2_ring();
    ring.n_ref(1, 1, 0) = -1;
    CHECK_THROWS_AS(validate_ring(ring), std::invalid_argument);
  }
}
