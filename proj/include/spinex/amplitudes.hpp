#pragma once

// Product-orbital amplitudes: determinant for fermions, permanent for bosons.
// orbital_matrix(i, j) is orbital i evaluated at particle j; swapping two
// particles swaps two columns.

#include "spinex/linalg.hpp"

namespace spinex {

inline constexpr Eigen::Index kMaxPermanentOrder = 12;

/// Throws Error(kDomain) for non-square input.
Complex slater_amplitude(const CMatrix& orbital_matrix);

/// Ryser inclusion-exclusion with Gray-code column updates, O(2^n n).
/// Throws Error(kDomain) for non-square input or n > kMaxPermanentOrder.
Complex permanent_amplitude(const CMatrix& orbital_matrix);

}  // namespace spinex
