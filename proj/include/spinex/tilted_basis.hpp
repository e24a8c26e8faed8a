#pragma once

// Tilted spin states chi(s, theta_l) = exp(i theta_l S_x) chi(s, 0) with
// theta_l = l pi / 2s, l = 0..2s, and the per-particle tilt operators that
// carry the exchange relation over to them.

#include <span>

#include "spinex/exchange.hpp"
#include "spinex/spin_algebra.hpp"
#include "spinex/state.hpp"

namespace spinex {

struct TiltedState {
  SpinValue spin;
  int l = 0;
  double theta = 0.0;
  CVector vector;
};

/// l pi / 2s, evaluated as pi * (l / 2s) so that theta_0 = 0 and
/// theta_{2s} = pi exactly. The spin-0 singleton has theta = 0.
/// Throws Error(kDomain) unless 0 <= l <= 2s.
double theta_l(SpinValue s, int l);

/// chi(s, 0) is the highest-weight state (1, 0, ..., 0).
TiltedState chi(SpinValue s, int l);

struct TiltedGram {
  CMatrix gram;  // gram(l, l') = <chi_l, chi_l'>
  double min_singular_value = 0.0;
};

/// The tilted family spans the spin space iff min_singular_value > 0.
TiltedGram tilted_gram(SpinValue s);

/// exp(i theta_{l_j} S_x) on spinor j of every term.
/// Throws Error(kDomain) on length mismatch or an invalid l.
MultiParticleState tilt_multi(const MultiParticleState& state, std::span<const int> l_list);

/// Builds Psi0 = symmetrize(chi_0 x chi_0 at two points, (-1)^{2s}), tilts it
/// with (la, lb) and with (lb, la), and checks
///   tilt(la, lb) Psi0 = (-1)^{2s} * transpose(tilt(lb, la) Psi0),
/// i.e. the exchange relation with the tilt labels moving along with the
/// argument slots.
ExchangeReport verify_tilt_transfer(SpinValue s, int la, int lb, double tolerance = kDefaultTolerance);

}  // namespace spinex
