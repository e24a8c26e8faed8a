#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/LU>

namespace spinex {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

/// A point of the representation space. Coordinates are in an arbitrary
/// but fixed length unit.
using Point3 = Eigen::Vector3d;

inline constexpr Complex kI{0.0, 1.0};

/// Largest absolute entry of a complex matrix (zero for empty input).
inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const CVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace spinex
