#pragma once

// Spin-s generator matrices and unitary rotation operators.
//
// Units: hbar = 1. Basis ordering is highest weight first, i.e. basis index k
// carries magnetic quantum number m = s - k. Rotations use the sign
// convention exp(+i * angle * n.S).

#include <compare>

#include "spinex/linalg.hpp"

namespace spinex {

/// Spin quantum number stored exactly as the integer 2s.
class SpinValue {
 public:
  constexpr SpinValue() = default;

  /// Throws Error(kDomain) for negative input.
  static SpinValue from_twice(int twice_spin);

  constexpr int twice_spin() const noexcept { return twice_; }
  constexpr int dimension() const noexcept { return twice_ + 1; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  constexpr bool fermion() const noexcept { return (twice_ & 1) != 0; }
  /// (-1)^{2s}
  constexpr int exchange_sign() const noexcept { return fermion() ? -1 : 1; }

  /// Magnetic quantum number 2m of basis index k.
  constexpr int twice_m(int k) const noexcept { return twice_ - 2 * k; }

  friend constexpr auto operator<=>(SpinValue, SpinValue) = default;

 private:
  constexpr explicit SpinValue(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline SpinValue make_spin(int twice_spin) { return SpinValue::from_twice(twice_spin); }

struct SpinOperatorSet {
  SpinValue spin;
  CMatrix sx;
  CMatrix sy;
  CMatrix sz;

  /// n.S for a 3-vector n.
  CMatrix along(const Vec3& n) const { return n.x() * sx + n.y() * sy + n.z() * sz; }

  /// The same algebra expressed in a rotated basis: S -> W S W^dagger.
  SpinOperatorSet conjugated(const CMatrix& w) const;
};

SpinOperatorSet generators(SpinValue s);

struct UnitaryMatrix {
  CMatrix entries;
  Vec3 generator_axis = Vec3::UnitZ();
  double angle = 0.0;
};

/// exp(i * angle * axis.S) built from the standard generators.
/// Throws Error(kDomain) when |axis| deviates from 1 by more than
/// kAxisNormTolerance.
UnitaryMatrix rotation(const Vec3& axis, double angle, SpinValue s);

/// Same, for a caller supplied (possibly basis-rotated) generator set.
UnitaryMatrix rotation(const Vec3& axis, double angle, const SpinOperatorSet& ops);

/// exp(i * pi * S_z) assembled from the residue of 2m mod 4, so every entry
/// is exactly one of 1, i, -1, -i.
UnitaryMatrix exact_pi_z_rotation(SpinValue s);

/// exp(i * angle * H) for Hermitian H by unitary diagonalization.
CMatrix hermitian_exp_i(const CMatrix& h, double angle);

/// Normalized eigenvector of n.S with the largest eigenvalue (m = +s along n).
CVector stretch_state(const SpinOperatorSet& ops, const Vec3& n);

inline constexpr double kAxisNormTolerance = 1e-9;

}  // namespace spinex
