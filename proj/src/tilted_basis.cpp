#include "spinex/tilted_basis.hpp"

#include <numbers>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "spinex/error.hpp"

namespace spinex {

double theta_l(SpinValue s, int l) {
  if (l < 0 || l > s.twice_spin()) {
    fail(ErrorCode::kDomain, "tilt index " + std::to_string(l) + " outside 0..2s");
  }
  if (s.twice_spin() == 0) return 0.0;
  return std::numbers::pi * (static_cast<double>(l) / s.twice_spin());
}

namespace {

CMatrix tilt_operator(const SpinOperatorSet& ops, int l) {
  return rotation(Vec3::UnitX(), theta_l(ops.spin, l), ops).entries;
}

}  // namespace

TiltedState chi(SpinValue s, int l) {
  const double theta = theta_l(s, l);
  CVector base = CVector::Zero(s.dimension());
  base(0) = 1.0;
  return {s, l, theta, rotation(Vec3::UnitX(), theta, s).entries * base};
}

TiltedGram tilted_gram(SpinValue s) {
  const int dim = s.dimension();
  CMatrix family(dim, dim);
  for (int l = 0; l < dim; ++l) family.col(l) = chi(s, l).vector;

  TiltedGram out;
  out.gram = family.adjoint() * family;
  Eigen::JacobiSVD<CMatrix> svd(family);
  out.min_singular_value = svd.singularValues().minCoeff();
  return out;
}

MultiParticleState tilt_multi(const MultiParticleState& state, std::span<const int> l_list) {
  if (l_list.size() != state.size()) fail(ErrorCode::kDomain, "one tilt index per slot required");

  std::vector<CMatrix> tilts;
  for (std::size_t j = 0; j < state.size(); ++j) {
    tilts.push_back(tilt_operator(generators(state.spins()[j]), l_list[j]));
  }
  MultiParticleState out(state.spins(), state.tags());
  for (ProductTerm t : state.terms()) {
    for (std::size_t j = 0; j < t.spinors.size(); ++j) t.spinors[j] = tilts[j] * t.spinors[j];
    out.add_term(std::move(t));
  }
  return out;
}

ExchangeReport verify_tilt_transfer(SpinValue s, int la, int lb, double tolerance) {
  // Validate both labels up front so errors name the bad index.
  theta_l(s, la);
  theta_l(s, lb);

  const Point3 xa(-1.0, 0.0, 0.0);
  const Point3 xb(1.0, 0.0, 0.0);
  const CVector base = chi(s, 0).vector;
  MultiParticleState product({s, s});
  product.add_term({1.0, {xa, xb}, {base, base}});
  const MultiParticleState psi0 = symmetrize(product, s.exchange_sign());

  const int forward[2] = {la, lb};
  const int backward[2] = {lb, la};
  const CanonicalState lhs = canonical_form(tilt_multi(psi0, forward));
  const CanonicalState rhs = canonical_form(tilt_multi(psi0, backward).transposed(0, 1));

  ExchangeReport r;
  r.spin = s;
  r.expected_phase = static_cast<double>(s.exchange_sign());
  r.measured_phase = canonical_ratio(lhs, rhs).value_or(Complex(0.0, 0.0));
  r.residual = canonical_distance(lhs, rhs, r.expected_phase);
  r.geometry = build_midpoint_frame(xa, xb);
  r.tolerance = tolerance;
  r.passed = r.residual < tolerance;
  return r;
}

}  // namespace spinex
