#include "spinex/orbital.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "spinex/error.hpp"

namespace spinex {

MidpointFrame build_midpoint_frame(const Point3& a, const Point3& b, double coincidence_tol) {
  if (!a.allFinite() || !b.allFinite()) {
    fail(ErrorCode::kDomain, "point coordinates must be finite");
  }
  const Vec3 d = b - a;
  const double len = d.norm();
  if (len <= coincidence_tol) {
    fail(ErrorCode::kDegenerateGeometry, "coincident points: exchange axis is undefined");
  }

  MidpointFrame f;
  f.origin = 0.5 * (a + b);
  f.x_hat = d / len;
  Vec3 cross = f.x_hat.cross(Vec3::UnitZ());
  if (cross.norm() < 1e-6) cross = f.x_hat.cross(Vec3::UnitY());
  f.z_hat = cross.normalized();
  f.y_hat = f.z_hat.cross(f.x_hat);
  return f;
}

Point3 rotate_about_frame_z(const MidpointFrame& frame, const Point3& p, double angle) {
  const Vec3 d = p - frame.origin;
  const double cx = d.dot(frame.x_hat);
  const double cy = d.dot(frame.y_hat);
  const double cz = d.dot(frame.z_hat);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return frame.origin + (c * cx - s * cy) * frame.x_hat + (s * cx + c * cy) * frame.y_hat +
         cz * frame.z_hat;
}

namespace {

// sum_{k=0}^{order} x^k / k! for a complex argument
Complex truncated_exp(Complex x, int order) {
  Complex term = 1.0;
  Complex sum = 1.0;
  for (int k = 1; k <= order; ++k) {
    term *= x / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

}  // namespace

ShiftCheckResult orbital_shift_check(std::span<const int> modes, double phi0) {
  if (modes.empty()) fail(ErrorCode::kDomain, "mode list must be nonempty");
  for (int m : modes) {
    if (std::abs(m) > kMaxShiftMode) fail(ErrorCode::kDomain, "angular mode out of range");
  }

  ShiftCheckResult r;
  for (int m : modes) {
    // L_z e^{i m phi} = i * (i m) e^{i m phi} = -m e^{i m phi}, so the
    // operator exponential multiplies mode m by exp(-i m phi0).
    const Complex spectral = std::polar(1.0, -m * phi0);

    // Series path: the same exponential as a truncated Taylor series in the
    // exact mode derivative. Split into substeps with |m phi0 / steps| <= 1
    // so that order 40 is far past convergence.
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(m * phi0))));
    const Complex step = truncated_exp(Complex(0.0, -m * phi0 / steps), kShiftSeriesOrder);
    Complex series = 1.0;
    for (int k = 0; k < steps; ++k) series *= step;

    for (int g = 0; g < kShiftGridSize; ++g) {
      const double phi = 2.0 * std::numbers::pi * g / kShiftGridSize;
      const Complex mode = std::polar(1.0, m * phi);
      const Complex shifted = std::polar(1.0, m * (phi - phi0));
      r.spectral_residual = std::max(r.spectral_residual, std::abs(spectral * mode - shifted));
      r.series_residual = std::max(r.series_residual, std::abs(series * mode - shifted));
    }
  }
  r.max_residual = std::max(r.spectral_residual, r.series_residual);
  return r;
}

}  // namespace spinex
