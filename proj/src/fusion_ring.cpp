#include "wharf/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "wharf/errors.hpp"

namespace wharf {

void FusionRingData::init(std::vector<std::string> basis_labels) {
  labels = std::move(basis_labels);
  const int r = rank();
  dual.resize(r);
  for (int a = 0; a < r; ++a) dual[a] = a;
  n_flat.assign(static_cast<std::size_t>(r) * r * r, 0);
}

void validate_ring(const FusionRingData& ring) {
  const int r = ring.rank();
  if (r <= 0) throw InputError("fusion ring must have at least one label");
  if (static_cast<int>(ring.dual.size()) != r ||
      ring.n_flat.size() != static_cast<std::size_t>(r) * r * r) {
    throw InputError("fusion ring table sizes do not match the label count");
  }
  if (ring.unit < 0 || ring.unit >= r) {
    throw InputError("fusion ring unit label out of range");
  }
  for (int a = 0; a < r; ++a) {
    if (ring.dual[a] < 0 || ring.dual[a] >= r || ring.dual[ring.dual[a]] != a) {
      throw InputError("fusion ring dual map is not an involution");
    }
  }
  for (const int v : ring.n_flat) {
    if (v < 0) throw InputError("fusion multiplicities must be nonnegative");
  }
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      // Unit laws: 1 * a = a * 1 = a.
      const int left = ring.n(ring.unit, a, b);
      const int right = ring.n(a, ring.unit, b);
      const int expect = (a == b) ? 1 : 0;
      if (left != expect || right != expect) {
        throw InputError("fusion ring unit laws fail for label '" +
                         ring.labels[a] + "'");
      }
      // Frobenius reciprocity with the unit: N_ab^1 = delta_{b, dual(a)}.
      const int to_unit = ring.n(a, b, ring.unit);
      if (to_unit != ((b == ring.dual[a]) ? 1 : 0)) {
        throw InputError("fusion into the unit does not match the dual map (" +
                         ring.labels[a] + ", " + ring.labels[b] + ")");
      }
    }
  }
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        for (int d = 0; d < r; ++d) {
          int lhs = 0;
          int rhs = 0;
          for (int e = 0; e < r; ++e) {
            lhs += ring.n(a, b, e) * ring.n(e, c, d);
            rhs += ring.n(b, c, e) * ring.n(a, e, d);
          }
          if (lhs != rhs) {
            std::ostringstream msg;
            msg << "fusion ring associativity fails at (" << ring.labels[a]
                << ", " << ring.labels[b] << ", " << ring.labels[c] << ", "
                << ring.labels[d] << ")";
            throw InputError(msg.str());
          }
        }
      }
    }
  }
}

Mat fusion_matrix(const FusionRingData& ring, int a) {
  const int r = ring.rank();
  Mat m = Mat::Zero(r, r);
  for (int c = 0; c < r; ++c) {
    for (int b = 0; b < r; ++b) {
      m(c, b) = static_cast<double>(ring.n(a, b, c));
    }
  }
  return m;
}

std::vector<double> fp_dimensions(const FusionRingData& ring) {
  const int r = ring.rank();
  std::vector<double> dims(r, 1.0);
  for (int a = 0; a < r; ++a) {
    // Largest real eigenvalue of the left-multiplication matrix of a.
    const Mat m = fusion_matrix(ring, a);
    Eigen::ComplexEigenSolver<Mat> es(m);
    double best = 0.0;
    for (int i = 0; i < r; ++i) {
      const cxd ev = es.eigenvalues()(i);
      if (std::abs(ev.imag()) < 1e-9) best = std::max(best, ev.real());
    }
    dims[a] = best;
  }
  return dims;
}

Mat ring_characters(const FusionRingData& ring, std::uint64_t seed,
                    double tol) {
  const int r = ring.rank();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // A generic element of the commutative fusion algebra separates the
    // characters; its eigenvectors are the simultaneous eigenvectors of
    // every fusion matrix.
    Mat generic = Mat::Zero(r, r);
    for (int a = 0; a < r; ++a) generic += gauss(rng) * fusion_matrix(ring, a);
    Eigen::ComplexEigenSolver<Mat> es(generic);
    if (es.info() != Eigen::Success) continue;

    Mat chi = Mat::Zero(r, r);
    bool ok = true;
    for (int m = 0; m < r && ok; ++m) {
      const Vec v = es.eigenvectors().col(m);
      int j = 0;
      for (int i = 1; i < r; ++i) {
        if (std::abs(v(i)) > std::abs(v(j))) j = i;
      }
      if (std::abs(v(j)) < 1e-12) {
        ok = false;
        break;
      }
      for (int a = 0; a < r; ++a) {
        chi(m, a) = (fusion_matrix(ring, a) * v)(j) / v(j);
      }
    }
    if (!ok) continue;

    // Verify multiplicativity chi(a) chi(b) = sum_c N_ab^c chi(c) for every
    // character; a degenerate random combination fails this and is retried.
    double worst = 0.0;
    for (int m = 0; m < r; ++m) {
      if (std::abs(chi(m, ring.unit) - cxd{1.0, 0.0}) > tol) worst = 1.0;
      for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
          cxd rhs = 0.0;
          for (int c = 0; c < r; ++c) {
            rhs += static_cast<double>(ring.n(a, b, c)) * chi(m, c);
          }
          worst = std::max(worst, std::abs(chi(m, a) * chi(m, b) - rhs));
        }
      }
    }
    if (worst > tol) continue;

    // Distinct rows: the character table of a commutative split semisimple
    // algebra has no repeated characters.
    for (int m = 0; m < r && ok; ++m) {
      for (int m2 = m + 1; m2 < r; ++m2) {
        if ((chi.row(m) - chi.row(m2)).cwiseAbs().maxCoeff() < 1e-6) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    // Sort so the Frobenius-Perron character (all entries positive, maximal
    // total real part) appears first.
    std::vector<int> order(r);
    for (int m = 0; m < r; ++m) order[m] = m;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return chi.row(x).real().sum() > chi.row(y).real().sum();
    });
    Mat sorted(r, r);
    for (int m = 0; m < r; ++m) sorted.row(m) = chi.row(order[m]);
    return sorted;
  }
  throw std::runtime_error(
      "could not compute fusion ring characters: repeated degenerate random "
      "combinations");
}

FusionRingData fib_ring() {
  FusionRingData ring;
  ring.init({"1", "tau"});
  ring.name = "fibonacci";
  ring.unit = 0;
  ring.n_ref(0, 0, 0) = 1;
  ring.n_ref(0, 1, 1) = 1;
  ring.n_ref(1, 0, 1) = 1;
  ring.n_ref(1, 1, 0) = 1;
  ring.n_ref(1, 1, 1) = 1;
  validate_ring(ring);
  return ring;
}

FusionRingData z2_ring() {
  FusionRingData ring;
  ring.init({"0", "1"});
  ring.name = "z2";
  ring.unit = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      ring.n_ref(a, b, (a + b) % 2) = 1;
    }
  }
  validate_ring(ring);
  return ring;
}

}  // namespace wharf
