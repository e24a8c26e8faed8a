#pragma once

// Region-A bookkeeping: number the quantum-number sets by their distance
// from a chosen center (r_1 < r_2 < ... < r_n) and relate a specific
// argument order to that generic representative.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spinex/state.hpp"

namespace spinex {

struct RegionSignature {
  Point3 center = Point3::Zero();
  std::vector<double> radii;
  std::vector<std::size_t> order;  // order[k] = slot of the k-th nearest set
  int parity = 1;
  bool has_ties = false;
  bool in_region_a = false;
};

/// Radii closer than this (relative to max(1, r)) count as a tie.
inline constexpr double kRadiusTieTolerance = 1e-12;

/// Ascending radial sort. Equal radii are broken by (x, y, z), then tags,
/// then slot index. Throws Error(kDomain) for an empty config.
RegionSignature radial_order(std::span<const ParticleSet> config, const Point3& center = Point3::Zero());

struct CanonicalConfig {
  std::vector<ParticleSet> sets;
  int parity = 1;
};

CanonicalConfig canonicalize(std::span<const ParticleSet> config, const Point3& center = Point3::Zero());

/// Multiset equality: positions and spin states within tol, spins and tags
/// exactly equal. Order of the sets is irrelevant.
bool generic_equal(std::span<const ParticleSet> lhs, std::span<const ParticleSet> rhs, double tol);

/// Sign of a permutation given as an index list.
int permutation_sign(std::span<const std::size_t> perm);

}  // namespace spinex
