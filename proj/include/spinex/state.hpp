#pragma once

// Quantum-number sets and multi-particle states written as finite sums of
// product terms.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spinex/linalg.hpp"
#include "spinex/spin_algebra.hpp"

namespace spinex {

/// Discrete quantum numbers (charge, flavor, ...) as sorted (name, value) pairs.
using Tags = std::vector<std::pair<std::string, std::string>>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPositionMatchTolerance = 1e-9;
inline constexpr double kPruneThreshold = 1e-14;

/// One quantum-number set: position, spin, spin state and extra tags.
class ParticleSet {
 public:
  /// Throws Error(kDomain) if the spinor has the wrong dimension or is not
  /// unit norm. Tags are sorted by name.
  ParticleSet(Point3 position, SpinValue spin, CVector spin_state, Tags tags = {});

  const Point3& position() const noexcept { return position_; }
  SpinValue spin() const noexcept { return spin_; }
  const CVector& spin_state() const noexcept { return spin_state_; }
  const Tags& tags() const noexcept { return tags_; }

 private:
  Point3 position_;
  SpinValue spin_;
  CVector spin_state_;
  Tags tags_;
};

struct ProductTerm {
  Complex coeff;
  std::vector<Point3> positions;
  std::vector<CVector> spinors;
};

/// Sum of product terms over n argument slots. Each slot carries a fixed
/// spin and tag set; positions and spinors vary per term.
class MultiParticleState {
 public:
  /// The declared zero state on the given slots.
  MultiParticleState(std::vector<SpinValue> spins, std::vector<Tags> tags);
  explicit MultiParticleState(std::vector<SpinValue> spins);

  /// Single product term built from quantum-number sets.
  static MultiParticleState product(std::span<const ParticleSet> sets, Complex coeff = 1.0);

  /// Throws Error(kDomain) on shape mismatch.
  void add_term(ProductTerm term);

  std::size_t size() const noexcept { return spins_.size(); }
  const std::vector<SpinValue>& spins() const noexcept { return spins_; }
  const std::vector<Tags>& tags() const noexcept { return tags_; }
  const std::vector<ProductTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Same state with argument slots a and b transposed in every term:
  /// Psi(.. x_a .. x_b ..) -> Psi(.. x_b .. x_a ..).
  MultiParticleState transposed(std::size_t a, std::size_t b) const;

  /// Merge terms with equal positions and spinors, drop |coeff| < threshold.
  MultiParticleState simplified(double prune_threshold = kPruneThreshold) const;

  MultiParticleState scaled(Complex factor) const;

  /// Largest |coeff| over terms (0 for the zero state).
  double max_coeff() const;

 private:
  std::vector<SpinValue> spins_;
  std::vector<Tags> tags_;
  std::vector<ProductTerm> terms_;
};

/// A state resolved into one dense spin amplitude vector per distinct
/// position configuration. Two states are equal iff their canonical forms
/// agree: this is independent of how the terms happen to be split.
struct CanonicalState {
  struct Block {
    std::vector<Point3> positions;
    CVector amplitude;  // tensor product over slots, slot 0 most significant
  };
  std::vector<Block> blocks;
};

/// Throws Error(kDomain) if the combined spin dimension exceeds 2^22.
CanonicalState canonical_form(const MultiParticleState& state,
                              double position_tol = kPositionMatchTolerance);

/// Largest entrywise |lhs - factor * rhs| over matched position blocks;
/// unmatched blocks contribute their full magnitude.
double canonical_distance(const CanonicalState& lhs, const CanonicalState& rhs, Complex factor = 1.0,
                          double position_tol = kPositionMatchTolerance);

/// Least-squares ratio <rhs, lhs> / <rhs, rhs>; nullopt when rhs vanishes or
/// a block has no counterpart.
std::optional<Complex> canonical_ratio(const CanonicalState& lhs, const CanonicalState& rhs,
                                       double position_tol = kPositionMatchTolerance);

/// max over points of |p - q| within tolerance for whole position lists.
bool positions_match(std::span<const Point3> p, std::span<const Point3> q, double tol);

}  // namespace spinex
