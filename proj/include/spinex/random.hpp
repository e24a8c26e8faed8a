#pragma once

// Seeded random inputs for the verification suites. Everything is derived
// from std::mt19937_64 output bits directly (no std:: distributions), so a
// seed reproduces the same numbers on every standard library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/QR>

#include "spinex/linalg.hpp"

namespace spinex {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double normal() {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u = 1.0 - uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  Complex complex_normal() { return {normal(), normal()}; }

  Vec3 point(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width),
            uniform(-half_width, half_width)};
  }

  Vec3 unit_vector() {
    Vec3 v;
    do {
      v = Vec3(normal(), normal(), normal());
    } while (v.norm() < 1e-6);
    return v.normalized();
  }

  CMatrix complex_matrix(Eigen::Index rows, Eigen::Index cols) {
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
    return m;
  }

  CVector unit_spinor(Eigen::Index dim) { return complex_matrix(dim, 1).col(0).normalized(); }

  /// Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal
  /// phases folded back into Q.
  CMatrix unitary(Eigen::Index dim) {
    const CMatrix g = complex_matrix(dim, dim);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double mag = std::abs(r(k, k));
      if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return q;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spinex
