#pragma once

// Pair exchange as two pi rotations about the midpoint-frame z axis, the
// exchange-phase measurement, and (anti)symmetrization.

#include <cstddef>
#include <optional>

#include "spinex/orbital.hpp"
#include "spinex/spin_algebra.hpp"
#include "spinex/state.hpp"

namespace spinex {

struct ExchangeReport {
  SpinValue spin;
  Complex measured_phase{0.0, 0.0};
  Complex expected_phase{1.0, 0.0};
  double residual = 0.0;
  std::optional<MidpointFrame> geometry;
  double tolerance = 0.0;
  bool passed = false;
};

struct ExchangeOptions {
  /// Use this frame for every term instead of the one built from the term's
  /// slot-a and slot-b positions. It must have its origin at the midpoint of
  /// the two points and its x axis along the joining line (either sense).
  std::optional<MidpointFrame> frame;
  /// Generator realization for the exchanged slots; defaults to generators(s).
  std::optional<SpinOperatorSet> generators;
};

/// R_a R_b: per term, rotate position a then position b through pi about the
/// midpoint-frame z axis and multiply both spinors by exp(i pi z.S).
/// Coefficients are unchanged.
///
/// Throws Error(kIdenticalSetViolation) if the slot spins or tags differ,
/// Error(kDegenerateGeometry) if the two positions coincide in some term.
MultiParticleState apply_exchange(const MultiParticleState& state, std::size_t a, std::size_t b,
                                  const ExchangeOptions& options = {});

inline constexpr double kDefaultTolerance = 1e-10;

/// Two particles of spin s at a and b, both in the stretch state along the
/// frame z axis. Exchanges them and measures the ratio to the slot-swapped
/// original.
ExchangeReport exchange_phase(SpinValue s, const Point3& a, const Point3& b,
                              double tolerance = kDefaultTolerance);

/// As above with the spin apparatus expressed through `ops` (e.g. a basis
/// rotated copy of generators(s)).
ExchangeReport exchange_phase(const SpinOperatorSet& ops, const Point3& a, const Point3& b,
                              double tolerance = kDefaultTolerance);

/// Checks Psi = (-1)^{2s} * (Psi with slots a, b transposed). The residual is
/// the largest amplitude deviation.
ExchangeReport verify_eq1(const MultiParticleState& state, std::size_t a, std::size_t b,
                          double tolerance = kDefaultTolerance);

/// (1/n!) sum_P sign^{parity(P)} P(state), merged and pruned.
/// Throws Error(kIdenticalSetViolation) unless all slots share spin and tags,
/// Error(kDomain) if sign is not +-1 or n > kMaxSymmetrizeParticles.
MultiParticleState symmetrize(const MultiParticleState& state, int sign);

inline constexpr std::size_t kMaxSymmetrizeParticles = 8;

}  // namespace spinex
