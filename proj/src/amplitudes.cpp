#include "spinex/amplitudes.hpp"

#include <bit>
#include <cstdint>

#include <Eigen/LU>

#include "spinex/error.hpp"

namespace spinex {

namespace {

void require_square(const CMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kDomain, "orbital matrix must be square");
}

}  // namespace

Complex slater_amplitude(const CMatrix& orbital_matrix) {
  require_square(orbital_matrix);
  if (orbital_matrix.rows() == 0) return 1.0;
  return orbital_matrix.partialPivLu().determinant();
}

Complex permanent_amplitude(const CMatrix& orbital_matrix) {
  require_square(orbital_matrix);
  const Eigen::Index n = orbital_matrix.rows();
  if (n > kMaxPermanentOrder) fail(ErrorCode::kDomain, "permanent limited to n <= 12");
  if (n == 0) return 1.0;

  // perm(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a_ij.
  // Walk the subsets in Gray-code order so each step adds or removes one
  // column from the running row sums.
  CVector row_sums = CVector::Zero(n);
  Complex total = 0.0;
  std::uint32_t gray = 0;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t k = 1; k < count; ++k) {
    const int col = std::countr_zero(k);
    const std::uint32_t bit = std::uint32_t{1} << col;
    gray ^= bit;
    if (gray & bit) {
      row_sums += orbital_matrix.col(col);
    } else {
      row_sums -= orbital_matrix.col(col);
    }
    Complex prod = row_sums.prod();
    total += (std::popcount(gray) & 1) ? -prod : prod;
  }
  return (n & 1) ? -total : total;
}

}  // namespace spinex
