#include "spinex/exchange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "spinex/error.hpp"
#include "spinex/region.hpp"

namespace spinex {

namespace {

void require_identical_slots(const MultiParticleState& state, std::size_t a, std::size_t b) {
  if (a >= state.size() || b >= state.size()) fail(ErrorCode::kDomain, "slot index out of range");
  if (a == b) fail(ErrorCode::kDomain, "exchange needs two distinct slots");
  if (state.spins()[a] != state.spins()[b] || state.tags()[a] != state.tags()[b]) {
    fail(ErrorCode::kIdenticalSetViolation, "exchanged sets must have identical spin and tags");
  }
}

void require_frame_fits(const MidpointFrame& f, const Point3& pa, const Point3& pb) {
  const Vec3 d = pb - pa;
  const double len = d.norm();
  if (len <= kCoincidenceTolerance) {
    fail(ErrorCode::kDegenerateGeometry, "coincident points: exchange axis is undefined");
  }
  if ((f.origin - 0.5 * (pa + pb)).norm() > kPositionMatchTolerance ||
      std::abs(std::abs(f.x_hat.dot(d / len)) - 1.0) > 1e-12) {
    fail(ErrorCode::kDegenerateGeometry, "supplied frame is not a midpoint frame of the pair");
  }
}

}  // namespace

MultiParticleState apply_exchange(const MultiParticleState& state, std::size_t a, std::size_t b,
                                  const ExchangeOptions& options) {
  require_identical_slots(state, a, b);
  const SpinValue s = state.spins()[a];
  const SpinOperatorSet ops = options.generators ? *options.generators : generators(s);
  if (ops.sz.rows() != s.dimension()) fail(ErrorCode::kDomain, "generator dimension mismatch");

  MultiParticleState out(state.spins(), state.tags());
  for (ProductTerm t : state.terms()) {
    MidpointFrame frame;
    if (options.frame) {
      require_frame_fits(*options.frame, t.positions[a], t.positions[b]);
      frame = *options.frame;
    } else {
      frame = build_midpoint_frame(t.positions[a], t.positions[b]);
    }
    const CMatrix u = rotation(frame.z_hat, std::numbers::pi, ops).entries;

    t.positions[a] = rotate_about_frame_z(frame, t.positions[a], std::numbers::pi);  // R_a
    t.positions[b] = rotate_about_frame_z(frame, t.positions[b], std::numbers::pi);  // R_b
    t.spinors[a] = u * t.spinors[a];
    t.spinors[b] = u * t.spinors[b];
    out.add_term(std::move(t));
  }
  return out;
}

ExchangeReport exchange_phase(const SpinOperatorSet& ops, const Point3& a, const Point3& b,
                              double tolerance) {
  const SpinValue s = ops.spin;
  const MidpointFrame frame = build_midpoint_frame(a, b);
  const CVector chi = stretch_state(ops, frame.z_hat);

  MultiParticleState psi({s, s});
  psi.add_term({1.0, {a, b}, {chi, chi}});

  ExchangeOptions opts;
  opts.generators = ops;
  const CanonicalState exchanged = canonical_form(apply_exchange(psi, 0, 1, opts));
  const CanonicalState swapped = canonical_form(psi.transposed(0, 1));

  const auto ratio = canonical_ratio(exchanged, swapped);
  if (!ratio) fail(ErrorCode::kInternalConsistency, "exchanged state does not match swapped positions");
  if (canonical_distance(exchanged, swapped, *ratio) > 1e-8) {
    fail(ErrorCode::kInternalConsistency, "exchange ratio is not unique across amplitudes");
  }

  ExchangeReport r;
  r.spin = s;
  r.measured_phase = *ratio;
  r.expected_phase = static_cast<double>(s.exchange_sign());
  r.residual = std::abs(r.measured_phase - r.expected_phase);
  r.geometry = frame;
  r.tolerance = tolerance;
  r.passed = r.residual < tolerance;
  return r;
}

ExchangeReport exchange_phase(SpinValue s, const Point3& a, const Point3& b, double tolerance) {
  return exchange_phase(generators(s), a, b, tolerance);
}

ExchangeReport verify_eq1(const MultiParticleState& state, std::size_t a, std::size_t b,
                          double tolerance) {
  require_identical_slots(state, a, b);
  const SpinValue s = state.spins()[a];
  const double sign = s.exchange_sign();

  const CanonicalState direct = canonical_form(state);
  const CanonicalState swapped = canonical_form(state.transposed(a, b));

  ExchangeReport r;
  r.spin = s;
  r.expected_phase = sign;
  r.measured_phase = canonical_ratio(direct, swapped).value_or(Complex(0.0, 0.0));
  r.residual = canonical_distance(direct, swapped, sign);
  if (!state.is_zero()) {
    const auto& t = state.terms().front();
    if ((t.positions[a] - t.positions[b]).norm() > kCoincidenceTolerance) {
      r.geometry = build_midpoint_frame(t.positions[a], t.positions[b]);
    }
  }
  r.tolerance = tolerance;
  r.passed = r.residual < tolerance;
  return r;
}

MultiParticleState symmetrize(const MultiParticleState& state, int sign) {
  if (sign != 1 && sign != -1) fail(ErrorCode::kDomain, "symmetrizer sign must be +1 or -1");
  const std::size_t n = state.size();
  if (n > kMaxSymmetrizeParticles) fail(ErrorCode::kDomain, "too many particles to symmetrize");
  for (std::size_t j = 1; j < n; ++j) {
    if (state.spins()[j] != state.spins()[0] || state.tags()[j] != state.tags()[0]) {
      fail(ErrorCode::kIdenticalSetViolation, "symmetrization requires identical sets");
    }
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double norm = 1.0;
  for (std::size_t k = 2; k <= n; ++k) norm *= static_cast<double>(k);

  MultiParticleState out(state.spins(), state.tags());
  do {
    const double weight = (sign < 0 && permutation_sign(perm) < 0 ? -1.0 : 1.0) / norm;
    for (const auto& t : state.terms()) {
      ProductTerm p{t.coeff * weight, std::vector<Point3>(n), std::vector<CVector>(n)};
      for (std::size_t j = 0; j < n; ++j) {
        p.positions[j] = t.positions[perm[j]];
        p.spinors[j] = t.spinors[perm[j]];
      }
      out.add_term(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out.simplified();
}

}  // namespace spinex
