#include "spinex/spin_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "spinex/error.hpp"

namespace spinex {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kDegenerateGeometry: return "degenerate geometry";
    case ErrorCode::kIdenticalSetViolation: return "identical-set violation";
    case ErrorCode::kInternalConsistency: return "internal consistency error";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

SpinValue SpinValue::from_twice(int twice_spin) {
  if (twice_spin < 0) {
    fail(ErrorCode::kDomain, "twice_spin must be non-negative, got " + std::to_string(twice_spin));
  }
  return SpinValue(twice_spin);
}

SpinOperatorSet SpinOperatorSet::conjugated(const CMatrix& w) const {
  const CMatrix wd = w.adjoint();
  return {spin, w * sx * wd, w * sy * wd, w * sz * wd};
}

SpinOperatorSet generators(SpinValue s) {
  const int dim = s.dimension();
  const double j = s.value();

  // Raising operator: S+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>. With m = j - k
  // the target |m+1> sits at index k - 1.
  CMatrix raise = CMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) {
    const double m = 0.5 * s.twice_m(k);
    raise(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const CMatrix lower = raise.adjoint();

  SpinOperatorSet ops;
  ops.spin = s;
  ops.sx = 0.5 * (raise + lower);
  ops.sy = (raise - lower) / Complex(0.0, 2.0);
  ops.sz = CMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) ops.sz(k, k) = 0.5 * s.twice_m(k);
  return ops;
}

CMatrix hermitian_exp_i(const CMatrix& h, double angle) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  if (eig.info() != Eigen::Success) {
    fail(ErrorCode::kInternalConsistency, "eigendecomposition of generator failed");
  }
  const CMatrix& v = eig.eigenvectors();
  CVector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases(k) = std::polar(1.0, angle * eig.eigenvalues()(k));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

namespace {

void require_unit_axis(const Vec3& axis) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > kAxisNormTolerance) {
    fail(ErrorCode::kDomain, "rotation axis must be a unit vector");
  }
}

bool is_z_axis(const Vec3& axis) { return axis.x() == 0.0 && axis.y() == 0.0 && axis.z() == 1.0; }

}  // namespace

UnitaryMatrix rotation(const Vec3& axis, double angle, const SpinOperatorSet& ops) {
  require_unit_axis(axis);
  return {hermitian_exp_i(ops.along(axis), angle), axis, angle};
}

UnitaryMatrix rotation(const Vec3& axis, double angle, SpinValue s) {
  require_unit_axis(axis);
  if (is_z_axis(axis)) {
    // S_z is already diagonal in the standard basis.
    CMatrix u = CMatrix::Zero(s.dimension(), s.dimension());
    for (int k = 0; k < s.dimension(); ++k) u(k, k) = std::polar(1.0, angle * 0.5 * s.twice_m(k));
    return {u, axis, angle};
  }
  return rotation(axis, angle, generators(s));
}

UnitaryMatrix exact_pi_z_rotation(SpinValue s) {
  // exp(i pi m) = i^{2m}
  static constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CMatrix u = CMatrix::Zero(s.dimension(), s.dimension());
  for (int k = 0; k < s.dimension(); ++k) {
    const int residue = ((s.twice_m(k) % 4) + 4) % 4;
    u(k, k) = kPowersOfI[residue];
  }
  return {u, Vec3::UnitZ(), std::numbers::pi};
}

CVector stretch_state(const SpinOperatorSet& ops, const Vec3& n) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(ops.along(n));
  if (eig.info() != Eigen::Success) {
    fail(ErrorCode::kInternalConsistency, "eigendecomposition of generator failed");
  }
  // Eigenvalues come out ascending; the last column is m = +s.
  CVector v = eig.eigenvectors().col(ops.sz.rows() - 1);
  // Fix the free phase: make the largest-magnitude component real positive.
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  v *= std::polar(1.0, -std::arg(v(k)));
  return v.normalized();
}

}  // namespace spinex
