#pragma once

// Orbital side of the exchange: the midpoint frame of two representative
// points, rigid rotation about that frame's z axis, and a check that
// exp(i phi0 L_z) with L_z = i d/dphi acts on angular Fourier modes as the
// shift f(phi) -> f(phi - phi0).

#include <span>

#include "spinex/linalg.hpp"

namespace spinex {

/// Origin halfway between two points, x axis along the line joining them.
struct MidpointFrame {
  Point3 origin = Point3::Zero();
  Vec3 x_hat = Vec3::UnitX();
  Vec3 y_hat = Vec3::UnitY();
  Vec3 z_hat = Vec3::UnitZ();
};

inline constexpr double kCoincidenceTolerance = 1e-9;

/// Throws Error(kDegenerateGeometry) if |a - b| <= coincidence_tol.
///
/// z_hat is normalize(x_hat x r) for the first r in {e_z, e_y} with
/// |x_hat x r| >= 1e-6; y_hat = z_hat x x_hat.
MidpointFrame build_midpoint_frame(const Point3& a, const Point3& b,
                                   double coincidence_tol = kCoincidenceTolerance);

/// Counter-clockwise rotation of p about the frame z axis through the frame
/// origin.
Point3 rotate_about_frame_z(const MidpointFrame& frame, const Point3& p, double angle);

struct ShiftCheckResult {
  double spectral_residual = 0.0;  // multiplication by exp(-i m phi0) vs sampled shift
  double series_residual = 0.0;    // order-40 operator series vs sampled shift
  double max_residual = 0.0;
};

inline constexpr int kMaxShiftMode = 64;
inline constexpr int kShiftGridSize = 256;
inline constexpr int kShiftSeriesOrder = 40;

/// Throws Error(kDomain) for an empty mode list or |m| > kMaxShiftMode.
ShiftCheckResult orbital_shift_check(std::span<const int> modes, double phi0);

}  // namespace spinex
