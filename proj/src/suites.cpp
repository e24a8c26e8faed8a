#include "spinex/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "spinex/amplitudes.hpp"
#include "spinex/exchange.hpp"
#include "spinex/orbital.hpp"
#include "spinex/random.hpp"
#include "spinex/region.hpp"
#include "spinex/spin_algebra.hpp"
#include "spinex/tilted_basis.hpp"

namespace spinex {

const char* to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::kLess: return "<";
    case Comparison::kGreater: return ">";
    case Comparison::kGreaterEqual: return ">=";
    case Comparison::kEqual: return "==";
  }
  return "?";
}

CheckResult make_check(std::string suite, std::string check, double residual, double threshold,
                       Comparison comparison) {
  bool ok = false;
  switch (comparison) {
    case Comparison::kLess: ok = residual < threshold; break;
    case Comparison::kGreater: ok = residual > threshold; break;
    case Comparison::kGreaterEqual: ok = residual >= threshold; break;
    case Comparison::kEqual: ok = residual == threshold; break;
  }
  return {std::move(suite), std::move(check), residual, threshold, comparison, ok};
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAlgebraTolerance = 1e-12;

// Independent suite streams derived from the run seed.
Rng suite_rng(const SuiteConfig& cfg, std::uint64_t salt) {
  return Rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1)));
}

std::pair<Point3, Point3> random_pair(Rng& rng) {
  for (;;) {
    Point3 a = rng.point(10.0);
    Point3 b = rng.point(10.0);
    if ((a - b).norm() > 1e-3) return {a, b};
  }
}

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

}  // namespace

std::vector<CheckResult> spin_algebra_suite(const SuiteConfig& cfg) {
  const std::string suite = "spin_algebra";
  Rng rng = suite_rng(cfg, 1);

  double hermitian = 0.0, commutator = 0.0, casimir = 0.0, sz_layout = 0.0;
  double two_pi = 0.0, exact_pi = 0.0, pi_y = 0.0;
  for (int twice = 0; twice <= 10; ++twice) {
    const SpinValue s = make_spin(twice);
    const auto ops = generators(s);
    const Eigen::Index dim = s.dimension();
    for (const CMatrix* m : {&ops.sx, &ops.sy, &ops.sz}) {
      hermitian = std::max(hermitian, max_abs(CMatrix(*m - m->adjoint())));
    }
    commutator = std::max({commutator, max_abs(CMatrix(ops.sx * ops.sy - ops.sy * ops.sx - kI * ops.sz)),
                           max_abs(CMatrix(ops.sy * ops.sz - ops.sz * ops.sy - kI * ops.sx)),
                           max_abs(CMatrix(ops.sz * ops.sx - ops.sx * ops.sz - kI * ops.sy))});
    const double j = s.value();
    casimir = std::max(casimir, max_abs(CMatrix(ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz -
                                                 j * (j + 1.0) * identity(dim))));
    CMatrix expected_sz = CMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) expected_sz(k, k) = j - k;
    sz_layout = std::max(sz_layout, max_abs(CMatrix(ops.sz - expected_sz)));

    two_pi = std::max(two_pi, max_abs(CMatrix(rotation(Vec3::UnitZ(), 2.0 * kPi, s).entries -
                                              static_cast<double>(s.exchange_sign()) * identity(dim))));
    exact_pi = std::max(exact_pi, max_abs(CMatrix(exact_pi_z_rotation(s).entries -
                                                  rotation(Vec3::UnitZ(), kPi, s).entries)));

    // exp(-i pi S_y) has entries (-1)^{s-m} on the anti-diagonal m' = -m.
    CMatrix d_pi = CMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
      const int s_minus_m = k;  // m = s - k
      d_pi(dim - 1 - k, k) = (s_minus_m % 2 == 0) ? 1.0 : -1.0;
    }
    pi_y = std::max(pi_y, max_abs(CMatrix(rotation(Vec3::UnitY(), -kPi, s).entries - d_pi)));
  }

  double unitarity = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const SpinValue s = make_spin(rng.integer(0, 10));
    const auto u = rotation(rng.unit_vector(), rng.uniform(-4.0 * kPi, 4.0 * kPi), s).entries;
    unitarity = std::max(unitarity, max_abs(CMatrix(u.adjoint() * u - identity(s.dimension()))));
  }

  double composition = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const SpinValue s = make_spin(rng.integer(0, 10));
    const Vec3 n = rng.unit_vector();
    const double alpha = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    const double beta = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    composition = std::max(composition, max_abs(CMatrix(rotation(n, alpha, s).entries * rotation(n, beta, s).entries -
                                                         rotation(n, alpha + beta, s).entries)));
  }

  return {
      make_check(suite, "generators_hermitian", hermitian, kAlgebraTolerance),
      make_check(suite, "commutators", commutator, kAlgebraTolerance),
      make_check(suite, "casimir", casimir, kAlgebraTolerance),
      make_check(suite, "sz_diagonal_descending", sz_layout, kAlgebraTolerance),
      make_check(suite, "unitarity_random", unitarity, cfg.tolerance),
      make_check(suite, "composition_fixed_axis", composition, cfg.tolerance),
      make_check(suite, "two_pi_identity", two_pi, cfg.tolerance),
      make_check(suite, "exact_pi_z_agreement", exact_pi, kAlgebraTolerance),
      make_check(suite, "pi_y_closed_form", pi_y, cfg.tolerance),
  };
}

std::vector<CheckResult> orbital_suite(const SuiteConfig& cfg) {
  const std::string suite = "orbital";
  Rng rng = suite_rng(cfg, 2);

  double orthonormal = 0.0, endpoint_swap = 0.0, double_pi = 0.0, axis_distance = 0.0;
  for (int trial = 0; trial < 10 * cfg.geometry_trials; ++trial) {
    const auto [a, b] = random_pair(rng);
    const MidpointFrame f = build_midpoint_frame(a, b);
    Eigen::Matrix3d basis;
    basis << f.x_hat, f.y_hat, f.z_hat;
    orthonormal = std::max({orthonormal, (basis.transpose() * basis - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(),
                            std::abs(basis.determinant() - 1.0)});
    endpoint_swap = std::max({endpoint_swap, (rotate_about_frame_z(f, a, kPi) - b).norm(),
                              (rotate_about_frame_z(f, b, kPi) - a).norm()});

    const Point3 p = rng.point(10.0);
    const Point3 twice = rotate_about_frame_z(f, rotate_about_frame_z(f, p, kPi), kPi);
    double_pi = std::max(double_pi, (twice - p).norm());

    const double angle = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    const Point3 q = rotate_about_frame_z(f, p, angle);
    auto axis_dist = [&](const Point3& x) {
      const Vec3 d = x - f.origin;
      return (d - d.dot(f.z_hat) * f.z_hat).norm();
    };
    axis_distance = std::max(axis_distance, std::abs(axis_dist(q) - axis_dist(p)));
  }

  std::vector<int> modes(33);
  std::iota(modes.begin(), modes.end(), -16);
  ShiftCheckResult shift;
  for (double phi0 : {kPi / 4.0, kPi / 2.0, kPi}) {
    const auto r = orbital_shift_check(modes, phi0);
    shift.spectral_residual = std::max(shift.spectral_residual, r.spectral_residual);
    shift.series_residual = std::max(shift.series_residual, r.series_residual);
  }

  return {
      make_check(suite, "frame_orthonormal", orthonormal, kAlgebraTolerance),
      make_check(suite, "pi_rotation_swaps_endpoints", endpoint_swap, cfg.tolerance),
      make_check(suite, "double_pi_returns_points", double_pi, cfg.tolerance),
      make_check(suite, "axis_distance_preserved", axis_distance, kAlgebraTolerance),
      make_check(suite, "shift_spectral", shift.spectral_residual, kAlgebraTolerance),
      make_check(suite, "shift_series_order40", shift.series_residual, 1e-8),
  };
}

namespace {

MultiParticleState stretch_pair(SpinValue s, const Point3& a, const Point3& b) {
  const CVector chi = stretch_state(generators(s), build_midpoint_frame(a, b).z_hat);
  MultiParticleState psi({s, s});
  psi.add_term({1.0, {a, b}, {chi, chi}});
  return psi;
}

MultiParticleState random_product_state(Rng& rng, std::size_t n, SpinValue s, int terms) {
  MultiParticleState state(std::vector<SpinValue>(n, s));
  for (int t = 0; t < terms; ++t) {
    ProductTerm term{rng.complex_normal(), {}, {}};
    for (std::size_t j = 0; j < n; ++j) {
      term.positions.push_back(rng.point(5.0));
      term.spinors.push_back(rng.unit_spinor(s.dimension()));
    }
    state.add_term(std::move(term));
  }
  return state;
}

Complex naive_permanent(const CMatrix& m) {
  std::vector<int> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    Complex prod = 1.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) prod *= m(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

std::vector<CheckResult> exchange_suite(const SuiteConfig& cfg) {
  const std::string suite = "exchange_engine";
  Rng rng = suite_rng(cfg, 3);

  double phase = 0.0, double_exchange = 0.0, invariance = 0.0, magnitudes = 0.0;
  for (int twice = 0; twice <= 8; ++twice) {
    const SpinValue s = make_spin(twice);
    for (int trial = 0; trial < cfg.geometry_trials; ++trial) {
      const auto [a, b] = random_pair(rng);
      phase = std::max(phase, exchange_phase(s, a, b, cfg.tolerance).residual);

      const MultiParticleState psi = stretch_pair(s, a, b);
      const MultiParticleState back = apply_exchange(apply_exchange(psi, 0, 1), 0, 1);
      const auto& t = back.terms().front();
      const auto net = canonical_ratio(canonical_form(back), canonical_form(psi));
      double_exchange = std::max({double_exchange, (t.positions[0] - a).norm(), (t.positions[1] - b).norm(),
                                  net ? std::abs(*net - 1.0) : 1.0});

      // A state obeying the exchange relation is left unchanged by R_a R_b.
      const MultiParticleState sym = symmetrize(psi, s.exchange_sign());
      const MultiParticleState exchanged = apply_exchange(sym, 0, 1);
      invariance = std::max(invariance, canonical_distance(canonical_form(exchanged), canonical_form(sym)));
      for (std::size_t k = 0; k < sym.terms().size(); ++k) {
        magnitudes = std::max(magnitudes,
                              std::abs(std::abs(exchanged.terms()[k].coeff) - std::abs(sym.terms()[k].coeff)));
      }
    }
  }

  double basis = 0.0;
  for (int twice = 0; twice <= 6; ++twice) {
    const SpinValue s = make_spin(twice);
    const auto ops = generators(s);
    for (int trial = 0; trial < 10; ++trial) {
      const auto [a, b] = random_pair(rng);
      const Complex plain = exchange_phase(ops, a, b).measured_phase;
      const Complex rotated = exchange_phase(ops.conjugated(rng.unitary(s.dimension())), a, b).measured_phase;
      basis = std::max(basis, std::abs(plain - rotated));
    }
  }

  double idempotent = 0.0, eq1 = 0.0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const SpinValue s = make_spin(rng.integer(0, 3));
    const MultiParticleState x = random_product_state(rng, n, s, 2);
    const MultiParticleState once = symmetrize(x, s.exchange_sign());
    if (n <= 4) {
      idempotent = std::max(idempotent, canonical_distance(canonical_form(symmetrize(once, s.exchange_sign())),
                                                           canonical_form(once)));
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) eq1 = std::max(eq1, verify_eq1(once, a, b).residual);
    }
  }

  // Symmetric spin-1/2 state: fails the fermion relation by 2 max|coeff|.
  const SpinValue half = make_spin(1);
  const CVector up = CVector::Unit(2, 0);
  const CVector down = CVector::Unit(2, 1);
  const Point3 x1(-1.0, 0.0, 0.0), x2(1.0, 0.0, 0.0);
  MultiParticleState wrong({half, half});
  wrong.add_term({0.5, {x1, x2}, {up, down}});
  wrong.add_term({0.5, {x2, x1}, {down, up}});
  const double wrong_residual = verify_eq1(wrong, 0, 1).residual;

  const ParticleSet electron(x1, half, up, {{"charge", "-1"}});
  const ParticleSet pair[2] = {electron, electron};
  const MultiParticleState excluded = symmetrize(MultiParticleState::product(pair), -1);

  double permanent = 0.0, det_swap = 0.0, perm_swap = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const CMatrix m = rng.complex_matrix(n, n);
    const Complex naive = naive_permanent(m);
    permanent = std::max(permanent, std::abs(permanent_amplitude(m) - naive) / std::max(1.0, std::abs(naive)));
    if (n >= 2) {
      CMatrix swapped = m;
      swapped.col(0).swap(swapped.col(n - 1));
      const Complex det = slater_amplitude(m);
      const Complex per = permanent_amplitude(m);
      det_swap = std::max(det_swap, std::abs(slater_amplitude(swapped) + det) / std::max(1.0, std::abs(det)));
      perm_swap = std::max(perm_swap, std::abs(permanent_amplitude(swapped) - per) / std::max(1.0, std::abs(per)));
    }
  }

  return {
      make_check(suite, "exchange_phase_theorem", phase, cfg.tolerance),
      make_check(suite, "double_exchange_identity", double_exchange, cfg.tolerance),
      make_check(suite, "exchange_relation_state_invariant", invariance, cfg.tolerance),
      make_check(suite, "coefficient_magnitudes_preserved", magnitudes, kAlgebraTolerance),
      make_check(suite, "basis_independence", basis, cfg.tolerance),
      make_check(suite, "symmetrize_idempotent", idempotent, kAlgebraTolerance),
      make_check(suite, "symmetrize_satisfies_exchange_relation", eq1, cfg.tolerance),
      make_check(suite, "wrong_symmetry_rejected", wrong_residual, 0.5 * wrong.max_coeff(), Comparison::kGreaterEqual),
      make_check(suite, "exclusion_zero_terms", static_cast<double>(excluded.terms().size()), 0.0, Comparison::kEqual),
      make_check(suite, "permanent_matches_naive", permanent, 1e-9),
      make_check(suite, "determinant_column_swap", det_swap, kAlgebraTolerance),
      make_check(suite, "permanent_column_swap", perm_swap, kAlgebraTolerance),
  };
}

std::vector<CheckResult> tilted_suite(const SuiteConfig& cfg) {
  const std::string suite = "tilted_basis";
  Rng rng = suite_rng(cfg, 4);

  double theta_mismatch = 0.0, norm = 0.0;
  double min_sv = std::numeric_limits<double>::infinity();
  for (int twice = 0; twice <= 10; ++twice) {
    const SpinValue s = make_spin(twice);
    for (int l = 0; l <= twice; ++l) {
      const double expected = twice == 0 ? 0.0 : kPi * (static_cast<double>(l) / twice);
      if (theta_l(s, l) != expected) theta_mismatch += 1.0;
      norm = std::max(norm, std::abs(chi(s, l).vector.norm() - 1.0));
    }
    if (theta_l(s, 0) != 0.0) theta_mismatch += 1.0;
    if (twice > 0 && theta_l(s, twice) != kPi) theta_mismatch += 1.0;
    if (twice <= 8) min_sv = std::min(min_sv, tilted_gram(s).min_singular_value);
  }

  double commute = 0.0;
  for (int trial = 0; trial < cfg.geometry_trials; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
    const SpinValue s = make_spin(rng.integer(1, 4));
    const MultiParticleState x = random_product_state(rng, n, s, 2);
    std::vector<int> first(n, 0), second(n, 0);
    first[0] = rng.integer(0, s.twice_spin());
    second[n - 1] = rng.integer(0, s.twice_spin());
    const auto ab = tilt_multi(tilt_multi(x, first), second);
    const auto ba = tilt_multi(tilt_multi(x, second), first);
    commute = std::max(commute, canonical_distance(canonical_form(ab), canonical_form(ba)));
  }

  double transfer = 0.0;
  for (int twice = 0; twice <= 4; ++twice) {
    for (int la = 0; la <= twice; ++la) {
      for (int lb = 0; lb <= twice; ++lb) {
        transfer = std::max(transfer, verify_tilt_transfer(make_spin(twice), la, lb, cfg.tolerance).residual);
      }
    }
  }

  return {
      make_check(suite, "theta_table_exact", theta_mismatch, 0.0, Comparison::kEqual),
      make_check(suite, "chi_unit_norm", norm, kAlgebraTolerance),
      make_check(suite, "completeness_min_singular_value", min_sv, 1e-8, Comparison::kGreater),
      make_check(suite, "tilts_commute", commute, kAlgebraTolerance),
      make_check(suite, "tilt_transfer", transfer, cfg.tolerance),
  };
}

std::vector<CheckResult> region_suite(const SuiteConfig& cfg) {
  const std::string suite = "region";
  Rng rng = suite_rng(cfg, 5);
  const SpinValue s = make_spin(1);

  double idempotence = 0.0, parity = 0.0, generic = 0.0, region_a = 0.0;
  for (int trial = 0; trial < cfg.geometry_trials; ++trial) {
    std::vector<ParticleSet> config;
    for (int k = 0; k < 5; ++k) config.emplace_back(rng.point(5.0), s, rng.unit_spinor(2));
    const Point3 center = rng.point(1.0);

    const auto once = canonicalize(config, center);
    const auto twice = canonicalize(once.sets, center);
    if (twice.parity != 1 || !generic_equal(once.sets, twice.sets, 0.0)) idempotence += 1.0;
    for (std::size_t k = 0; k < once.sets.size(); ++k) {
      if (once.sets[k].position() != twice.sets[k].position()) idempotence += 1.0;
    }
    if (!radial_order(once.sets, center).in_region_a) region_a += 1.0;

    std::vector<std::size_t> perm(config.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = perm.size() - 1; k > 0; --k) {
      std::swap(perm[k], perm[static_cast<std::size_t>(rng.integer(0, static_cast<int>(k)))]);
    }
    std::vector<ParticleSet> permuted;
    for (std::size_t k : perm) permuted.push_back(config[k]);
    if (canonicalize(permuted, center).parity != permutation_sign(perm) * once.parity) parity += 1.0;

    std::vector<ParticleSet> exchanged = config;
    std::swap(exchanged[0], exchanged[1]);
    if (!generic_equal(config, exchanged, 1e-9)) generic += 1.0;
  }

  return {
      make_check(suite, "canonicalize_idempotent", idempotence, 0.0, Comparison::kEqual),
      make_check(suite, "parity_multiplicative", parity, 0.0, Comparison::kEqual),
      make_check(suite, "exchange_is_generic_identity", generic, 0.0, Comparison::kEqual),
      make_check(suite, "canonical_in_region_a", region_a, 0.0, Comparison::kEqual),
  };
}

std::vector<CheckResult> all_suites(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (auto* suite : {spin_algebra_suite, orbital_suite, exchange_suite, tilted_suite, region_suite}) {
    auto part = suite(cfg);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace spinex
