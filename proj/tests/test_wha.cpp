#include <doctest.h>

#include "wharf/fib.hpp"
#include "wharf/wha.hpp"

#include <cmath>

using namespace wharf;

TEST_CASE("verified two-block table passes every axiom") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  const AxiomReport rep = verify_axioms(A);
  CHECK(rep.max_residual() < 1e-10);
  CHECK(rep.star_gram_min_eig > 0.0);
  CHECK(rep.pass(1e-10));
}

TEST_CASE("dual table passes every axiom") {
  const WeakHopfAlgebraTable D = dual(build_fib_wha());
  const AxiomReport rep = verify_axioms(D);
  CHECK(rep.max_residual() < 1e-10);
  CHECK(rep.star_gram_min_eig > 0.0);
}

TEST_CASE("double dual recovers the original product and coproduct") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  const WeakHopfAlgebraTable DD = dual(dual(A));
  double worst = 0.0;
  for (int x = 0; x < A.dim; ++x)
    for (int y = 0; y < A.dim; ++y)
      for (int z = 0; z < A.dim; ++z) {
        worst = std::max(worst, std::abs(A.lam(x, y, z) - DD.lam(x, y, z)));
        worst = std::max(worst, std::abs(A.gam(x, y, z) - DD.gam(x, y, z)));
      }
  CHECK(worst < 1e-12);
  CHECK(max_abs(A.antipode - DD.antipode) < 1e-12);
}

TEST_CASE("flagged coproduct variant fails verification") {
  const AxiomReport rep = verify_axioms(build_fib_wha_flagged());
  // The counit identity and the multiplicativity of the coproduct both
  // break at order one.
  CHECK(rep.get("counit") > 0.1);
  CHECK(rep.get("comult_multiplicative") > 0.1);
  // The purely multiplicative layer is untouched.
  CHECK(rep.get("associativity") < 1e-12);
  CHECK(rep.get("unit") < 1e-12);
}

TEST_CASE("alternate middle term in the e_{2,23} coproduct row also fails") {
  const AxiomReport rep =
      verify_axioms(build_fib_wha_middle(fib_index(1, 2, 1)));
  CHECK(rep.max_residual() > 0.1);
}

TEST_CASE("a single sign flip is caught by the coproduct-multiplicativity check") {
  WeakHopfAlgebraTable A = build_fib_wha();
  const int row = fib_index(2, 3, 3);
  A.gam_ref(row, fib_index(2, 2, 2), fib_index(2, 1, 1)) *= -1.0;
  const AxiomReport rep = verify_axioms(A);
  CHECK(rep.get("comult_multiplicative") > 1e-3);
  CHECK(rep.get("associativity") < 1e-12);
}

TEST_CASE("multiply follows the two-block matrix-unit rules") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  auto basis_vec = [&](int k) {
    Vec v = Vec::Zero(A.dim);
    v(k) = 1.0;
    return v;
  };
  // e_{1,11} . e_{1,12} = e_{1,12}
  Vec p = multiply(A, basis_vec(fib_index(1, 1, 1)), basis_vec(fib_index(1, 1, 2)));
  CHECK(std::abs(p(fib_index(1, 1, 2)) - cxd{1.0}) < 1e-14);
  CHECK(p.cwiseAbs().sum() == doctest::Approx(1.0));
  // e_{1,12} . e_{1,12} = 0 (indices do not chain)
  p = multiply(A, basis_vec(fib_index(1, 1, 2)), basis_vec(fib_index(1, 1, 2)));
  CHECK(max_abs(p) < 1e-14);
  // cross-block products vanish
  p = multiply(A, basis_vec(fib_index(1, 1, 1)), basis_vec(fib_index(2, 1, 1)));
  CHECK(max_abs(p) < 1e-14);
  // the unit is neutral
  p = multiply(A, A.unit, basis_vec(fib_index(2, 2, 3)));
  CHECK(std::abs(p(fib_index(2, 2, 3)) - cxd{1.0}) < 1e-14);
}

TEST_CASE("comultiply reproduces the table and iterates coassociatively") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  Vec v = Vec::Zero(A.dim);
  const int x = fib_index(2, 3, 3);
  v(x) = 1.0;

  const Tensor two = comultiply(A, v, 2);
  double worst = 0.0;
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) {
      worst = std::max(worst, std::abs(two.at({a, b}) - A.gam(x, a, b)));
    }
  CHECK(worst < 1e-14);

  // (Delta (x) id) Delta == (id (x) Delta) Delta via the rank-3 output.
  const Tensor three = comultiply(A, v, 3);
  double res = 0.0;
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b)
      for (int c = 0; c < A.dim; ++c) {
        cxd right = 0.0;  // (id (x) Delta): sum_w G[x,a,w] G[w,b,c]
        for (int w = 0; w < A.dim; ++w) right += A.gam(x, a, w) * A.gam(w, b, c);
        res = std::max(res, std::abs(three.at({a, b, c}) - right));
      }
  CHECK(res < 1e-12);

  CHECK_THROWS_AS(comultiply(A, v, 0), std::invalid_argument);
  CHECK_THROWS_AS(comultiply(A, v, 12), std::invalid_argument);  // 13^12 entries
}

TEST_CASE("counit pairs with the unit to the rank of the counital block") {
  // The counit is supported on the 2x2 block, so eps(1) = 2.
  const WeakHopfAlgebraTable A = build_fib_wha();
  const cxd eps_of_unit = (A.counit.array() * A.unit.array()).sum();
  CHECK(std::abs(eps_of_unit - cxd{2.0}) < 1e-14);
}

TEST_CASE("physical module is a faithful unital star representation") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  const Representation phi = build_phi(A);
  CHECK(phi.dim == 5);
  CHECK(phi.hom_residual < 1e-12);
  CHECK(phi.is_unital);
  CHECK(phi.is_star);
  CHECK(phi.is_faithful);
}

TEST_CASE("monoidal product is an algebra map with projector unit") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  const Representation phi = build_phi(A);
  const Representation prod = monoidal_product(phi, phi);
  CHECK(prod.dim == 25);
  CHECK(prod.hom_residual < 1e-10);
  // rho(1) is a proper projector: idempotent, Hermitian, not the identity.
  const Mat p1 = prod.act(A.unit);
  CHECK(max_abs(p1 * p1 - p1) < 1e-12);
  CHECK(max_abs(p1 - Mat(p1.adjoint())) < 1e-12);
  CHECK(max_abs(p1 - Mat::Identity(25, 25)) > 0.5);
  CHECK_FALSE(prod.is_unital);
}

TEST_CASE("bond module of the dual splits into blocks of dims 2 and 3") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  const WeakHopfAlgebraTable D = dual(A);
  const Representation psi = build_psi(D, build_fib_pairing());
  CHECK(psi.hom_residual < 1e-10);

  // Restrictions to the two diagonal blocks are subrepresentations.
  auto restrict_block = [&](int off, int d) {
    std::vector<Mat> mats;
    mats.reserve(D.dim);
    for (const Mat& m : psi.mats) mats.push_back(m.block(off, off, d, d));
    return make_representation(D, std::move(mats));
  };
  const Representation psi_1 = restrict_block(0, 2);
  const Representation psi_t = restrict_block(2, 3);
  CHECK(psi_1.hom_residual < 1e-10);
  CHECK(psi_t.hom_residual < 1e-10);

  const IrrepDecomposition dec = decompose(psi, {psi_1, psi_t});
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0].multiplicity == 1);
  CHECK(dec.blocks[1].multiplicity == 1);
  CHECK(dec.residual < 1e-8);
}

TEST_CASE("golden fusion rules appear in the product of bond modules") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  const WeakHopfAlgebraTable D = dual(A);
  const Representation psi = build_psi(D, build_fib_pairing());
  auto restrict_block = [&](int off, int d) {
    std::vector<Mat> mats;
    for (const Mat& m : psi.mats) mats.push_back(m.block(off, off, d, d));
    return make_representation(D, std::move(mats));
  };
  const Representation psi_1 = restrict_block(0, 2);
  const Representation psi_t = restrict_block(2, 3);

  // psi_t (x) psi_t decomposes as psi_1 (+) psi_t (golden rule tau.tau=1+tau).
  const Representation tt = monoidal_product(psi_t, psi_t);
  const IrrepDecomposition dec = decompose(tt, {psi_1, psi_t});
  int m1 = 0, mt = 0;
  for (const auto& b : dec.blocks) {
    if (b.irrep_id == 0) m1 = b.multiplicity;
    if (b.irrep_id == 1) mt = b.multiplicity;
  }
  CHECK(m1 == 1);
  CHECK(mt == 1);
  CHECK(dec.residual < 1e-8);

  // psi_1 (x) psi_t contains psi_t exactly once and no psi_1.
  const Representation ot = monoidal_product(psi_1, psi_t);
  const IrrepDecomposition dec2 = decompose(ot, {psi_1, psi_t});
  m1 = mt = 0;
  for (const auto& b : dec2.blocks) {
    if (b.irrep_id == 0) m1 = b.multiplicity;
    if (b.irrep_id == 1) mt = b.multiplicity;
  }
  CHECK(m1 == 0);
  CHECK(mt == 1);
}

TEST_CASE("decompose reports an error when the candidate list is incomplete") {
  const WeakHopfAlgebraTable A = build_fib_wha();
  const WeakHopfAlgebraTable D = dual(A);
  const Representation psi = build_psi(D, build_fib_pairing());
  auto restrict_block = [&](int off, int d) {
    std::vector<Mat> mats;
    for (const Mat& m : psi.mats) mats.push_back(m.block(off, off, d, d));
    return make_representation(D, std::move(mats));
  };
  const Representation psi_1 = restrict_block(0, 2);
  CHECK_THROWS_AS(decompose(psi, {psi_1}), std::runtime_error);
}

TEST_CASE("dual construction rejects a singular antipode") {
  WeakHopfAlgebraTable A = build_fib_wha();
  A.antipode.col(0).setZero();
  CHECK_THROWS_AS(dual(A), std::invalid_argument);
}
