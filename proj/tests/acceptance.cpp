// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Thresholds are fixed here and are not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "spinex/amplitudes.hpp"
#include "spinex/exchange.hpp"
#include "spinex/orbital.hpp"
#include "spinex/random.hpp"
#include "spinex/spin_algebra.hpp"
#include "spinex/tilted_basis.hpp"

using namespace spinex;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::pair<Point3, Point3> random_pair(Rng& rng) {
  for (;;) {
    const Point3 a = rng.point(10), b = rng.point(10);
    if ((a - b).norm() > 1e-3) return {a, b};
  }
}

MultiParticleState stretch_pair(SpinValue s, const Point3& a, const Point3& b) {
  const CVector chi = stretch_state(generators(s), build_midpoint_frame(a, b).z_hat);
  MultiParticleState psi({s, s});
  psi.add_term({1.0, {a, b}, {chi, chi}});
  return psi;
}

// 1. Exchange phase (-1)^{2s}, 2s = 0..8, 20 geometries each, < 1e-10, < 1 s.
Outcome phase_table() {
  Rng rng(2024);
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  bool signs = true;
  for (int twice = 0; twice <= 8; ++twice) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto [a, b] = random_pair(rng);
      const auto r = exchange_phase(make_spin(twice), a, b);
      worst = std::max(worst, r.residual);
      signs = signs && r.expected_phase.real() == (twice % 2 ? -1.0 : 1.0) &&
              std::signbit(r.measured_phase.real()) == (twice % 2 == 1);
    }
  }
  const double elapsed = seconds_since(t0);
  return {signs && worst < 1e-10 && elapsed < 1.0,
          "max residual " + sci(worst) + ", " + sci(elapsed) + " s"};
}

// 2. rotation(z, 2 pi, s) = (-1)^{2s} I, 2s = 0..10, < 1e-10, < 0.1 s.
Outcome two_pi_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int twice = 0; twice <= 10; ++twice) {
    const SpinValue s = make_spin(twice);
    const CMatrix expected = (twice % 2 ? -1.0 : 1.0) * CMatrix::Identity(s.dimension(), s.dimension());
    worst = std::max(worst, max_abs(CMatrix(rotation(Vec3::UnitZ(), 2 * kPi, s).entries - expected)));
  }
  const double elapsed = seconds_since(t0);
  return {worst < 1e-10 && elapsed < 0.1, "max deviation " + sci(worst) + ", " + sci(elapsed) + " s"};
}

// 3. Commutators and Casimir, 2s = 0..10, < 1e-12.
Outcome generator_algebra() {
  double worst = 0.0;
  for (int twice = 0; twice <= 10; ++twice) {
    const auto o = generators(make_spin(twice));
    const double j = 0.5 * twice;
    worst = std::max({worst, max_abs(CMatrix(o.sx * o.sy - o.sy * o.sx - kI * o.sz)),
                      max_abs(CMatrix(o.sy * o.sz - o.sz * o.sy - kI * o.sx)),
                      max_abs(CMatrix(o.sz * o.sx - o.sx * o.sz - kI * o.sy)),
                      max_abs(CMatrix(o.sx * o.sx + o.sy * o.sy + o.sz * o.sz -
                                      j * (j + 1) * CMatrix::Identity(twice + 1, twice + 1)))});
  }
  return {worst < 1e-12, "max deviation " + sci(worst)};
}

// 4. Shift check: spectral < 1e-12, order-40 series < 1e-8, |m| <= 16.
Outcome orbital_shift() {
  std::vector<int> modes(33);
  std::iota(modes.begin(), modes.end(), -16);
  double spectral = 0.0, series = 0.0;
  for (double phi0 : {kPi / 4, kPi / 2, kPi}) {
    const auto r = orbital_shift_check(modes, phi0);
    spectral = std::max(spectral, r.spectral_residual);
    series = std::max(series, r.series_residual);
  }
  return {spectral < 1e-12 && series < 1e-8, "spectral " + sci(spectral) + ", series " + sci(series)};
}

// 5. Double exchange restores positions and total phase +1, 2s = 0..8.
Outcome double_exchange() {
  Rng rng(77);
  double positions = 0.0, phase = 0.0;
  for (int twice = 0; twice <= 8; ++twice) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto [a, b] = random_pair(rng);
      const auto psi = stretch_pair(make_spin(twice), a, b);
      const auto back = apply_exchange(apply_exchange(psi, 0, 1), 0, 1);
      positions = std::max({positions, (back.terms()[0].positions[0] - a).norm(),
                            (back.terms()[0].positions[1] - b).norm()});
      const auto net = canonical_ratio(canonical_form(back), canonical_form(psi));
      phase = std::max(phase, net ? std::abs(*net - 1.0) : 1.0);
    }
  }
  return {positions < 1e-10 && phase < 1e-10, "positions " + sci(positions) + ", phase " + sci(phase)};
}

// 6. Symmetrized states satisfy the exchange relation for every pair (n <= 5); the wrong
// symmetry fails by at least 0.5 max|coeff|.
Outcome exchange_relation_enforcement() {
  Rng rng(606);
  double worst = 0.0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int twice = 0; twice <= 3; ++twice) {
      const SpinValue s = make_spin(twice);
      MultiParticleState x(std::vector<SpinValue>(n, s));
      for (int t = 0; t < 2; ++t) {
        ProductTerm term{rng.complex_normal(), {}, {}};
        for (std::size_t j = 0; j < n; ++j) {
          term.positions.push_back(rng.point(5));
          term.spinors.push_back(rng.unit_spinor(s.dimension()));
        }
        x.add_term(std::move(term));
      }
      const auto sym = symmetrize(x, s.exchange_sign());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) worst = std::max(worst, verify_eq1(sym, a, b).residual);
    }
  }

  const SpinValue half = make_spin(1);
  const CVector up = CVector::Unit(2, 0), down = CVector::Unit(2, 1);
  MultiParticleState wrong({half, half});
  wrong.add_term({0.5, {{-1, 0, 0}, {1, 0, 0}}, {up, down}});
  wrong.add_term({0.5, {{1, 0, 0}, {-1, 0, 0}}, {down, up}});
  const auto w = verify_eq1(wrong, 0, 1);
  const bool rejected = !w.passed && w.residual >= 0.5 * wrong.max_coeff();
  return {worst < 1e-10 && rejected,
          "max residual " + sci(worst) + ", counterexample residual " + sci(w.residual)};
}

// 7. Antisymmetrizing two identical spin-1/2 sets gives exactly zero.
Outcome exclusion_zero() {
  const ParticleSet e({0.25, -1.0, 3.0}, make_spin(1), CVector::Unit(2, 0), {{"charge", "-1"}});
  const ParticleSet pair[2] = {e, e};
  const auto zero = symmetrize(MultiParticleState::product(pair), -1);
  return {zero.is_zero(), std::to_string(zero.terms().size()) + " terms after pruning"};
}

// 8. theta tables, completeness, tilt transfer.
Outcome tilted_basis() {
  int theta_bad = 0;
  for (int twice = 0; twice <= 8; ++twice) {
    const SpinValue s = make_spin(twice);
    for (int l = 0; l <= twice; ++l) {
      const double expected = twice == 0 ? 0.0 : kPi * (static_cast<double>(l) / twice);
      const long double exact = twice == 0 ? 0.0L : l * std::numbers::pi_v<long double> / twice;
      const double got = theta_l(s, l);
      if (got != expected || std::abs(static_cast<long double>(got) - exact) > 4e-16L) ++theta_bad;
    }
    if (theta_l(s, 0) != 0.0 || (twice > 0 && theta_l(s, twice) != kPi)) ++theta_bad;
  }
  double min_sv = 1.0;
  for (int twice = 0; twice <= 8; ++twice) min_sv = std::min(min_sv, tilted_gram(make_spin(twice)).min_singular_value);
  double transfer = 0.0;
  for (int twice = 0; twice <= 4; ++twice)
    for (int la = 0; la <= twice; ++la)
      for (int lb = 0; lb <= twice; ++lb)
        transfer = std::max(transfer, verify_tilt_transfer(make_spin(twice), la, lb).residual);
  return {theta_bad == 0 && min_sv > 1e-8 && transfer < 1e-10,
          std::to_string(theta_bad) + " theta mismatches, min singular value " + sci(min_sv) +
              ", transfer residual " + sci(transfer)};
}

// 9. Permanent and determinant against permutation sums; column swaps.
Outcome amplitudes() {
  Rng rng(909);
  double permanent = 0.0, det_swap = 0.0, perm_swap = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const CMatrix m = rng.complex_matrix(n, n);
      const Complex naive = oracle::permutation_sum(m, false);
      permanent = std::max(permanent, std::abs(permanent_amplitude(m) - naive) / std::abs(naive));
      if (n < 2) continue;
      CMatrix swapped = m;
      swapped.col(0).swap(swapped.col(n - 1));
      const Complex det = slater_amplitude(m), per = permanent_amplitude(m);
      det_swap = std::max(det_swap, std::abs(slater_amplitude(swapped) + det) / std::abs(det));
      perm_swap = std::max(perm_swap, std::abs(permanent_amplitude(swapped) - per) / std::abs(per));
    }
  }
  return {permanent < 1e-9 && det_swap < 1e-12 && perm_swap < 1e-12,
          "permanent rel " + sci(permanent) + ", det swap " + sci(det_swap) + ", perm swap " + sci(perm_swap)};
}

// 10. Conjugating the spin apparatus by random unitaries, 2s <= 6.
Outcome basis_independence() {
  Rng rng(1010);
  double worst = 0.0;
  for (int twice = 0; twice <= 6; ++twice) {
    const SpinValue s = make_spin(twice);
    const auto ops = generators(s);
    for (int trial = 0; trial < 10; ++trial) {
      const auto [a, b] = random_pair(rng);
      const Complex base = exchange_phase(ops, a, b).measured_phase;
      const Complex rotated = exchange_phase(ops.conjugated(rng.unitary(s.dimension())), a, b).measured_phase;
      worst = std::max(worst, std::abs(base - rotated));
    }
  }
  return {worst < 1e-10, "max phase change " + sci(worst)};
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  FILE* pipe = popen((std::string(SPINEX_CLI_PATH) + " " + args).c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

// 11. CLI contract.
Outcome cli_contract() {
  const CliRun first = run_cli("verify-all");
  const CliRun second = run_cli("verify-all");
  const bool verify_ok = first.status == 0 && second.status == 0 && first.out == second.out && !first.out.empty();

  const CliRun table = run_cli("phase-table --twice-spin-max 8");
  bool table_ok = table.status == 0;
  double worst = 0.0;
  try {
    const auto doc = nlohmann::json::parse(table.out);
    table_ok = table_ok && doc["passed"] == true && doc["rows"].size() == 9;
    for (std::size_t k = 0; k < doc["rows"].size(); ++k) {
      const auto& row = doc["rows"][k];
      const int sign = (k % 2) ? -1 : 1;
      worst = std::max(worst, row["residual"].get<double>());
      table_ok = table_ok && row["twice_spin"] == static_cast<int>(k) && row["expected"] == sign &&
                 std::abs(row["measured_re"].get<double>() - sign) < 1e-10 && row["passed"] == true;
    }
  } catch (const std::exception&) {
    table_ok = false;
  }
  return {verify_ok && table_ok && worst < 1e-10,
          std::string("verify-all ") + (verify_ok ? "deterministic, exit 0" : "FAILED") +
              "; phase-table max residual " + sci(worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1  spin-statistics phase table", phase_table},
      {"2  2pi rotation identity", two_pi_identity},
      {"3  generator algebra", generator_algebra},
      {"4  orbital shift check", orbital_shift},
      {"5  double-exchange identity", double_exchange},
      {"6  exchange relation enforcement", exchange_relation_enforcement},
      {"7  exclusion zero", exclusion_zero},
      {"8  tilted basis", tilted_basis},
      {"9  permanent/determinant oracles", amplitudes},
      {"10 basis independence", basis_independence},
      {"11 CLI contract", cli_contract},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << "  (" << o.detail << ")\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
