#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "spinex/spinex.h"

TEST_CASE("rotation through the C API") {
  const double z[3] = {0, 0, 1};
  spx_matrix* m = nullptr;
  REQUIRE(spx_rotation(z, 2 * std::numbers::pi, 1, &m) == SPX_OK);
  size_t rows = 0, cols = 0;
  REQUIRE(spx_matrix_dim(m, &rows, &cols) == SPX_OK);
  CHECK(rows == 2);
  CHECK(cols == 2);
  double re = 0, im = 0;
  REQUIRE(spx_matrix_get(m, 0, 0, &re, &im) == SPX_OK);
  CHECK(std::abs(re + 1.0) < 1e-15);
  CHECK(spx_matrix_get(m, 2, 0, &re, &im) == SPX_ERR_DOMAIN);
  spx_matrix_free(m);

  const double bad_axis[3] = {1, 1, 0};
  CHECK(spx_rotation(bad_axis, 1.0, 1, &m) == SPX_ERR_DOMAIN);
  CHECK(std::strlen(spx_last_error()) > 0);
  CHECK(spx_rotation(z, 1.0, -1, &m) == SPX_ERR_DOMAIN);
  CHECK(spx_rotation(nullptr, 1.0, 1, &m) == SPX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("exact pi rotation and generators") {
  spx_matrix* m = nullptr;
  REQUIRE(spx_exact_pi_z_rotation(2, &m) == SPX_OK);
  double re = 0, im = 0;
  spx_matrix_get(m, 0, 0, &re, &im);
  CHECK(re == -1.0);
  spx_matrix_free(m);

  REQUIRE(spx_generator(1, 'x', &m) == SPX_OK);
  spx_matrix_get(m, 0, 1, &re, &im);
  CHECK(re == 0.5);
  spx_matrix_free(m);
  CHECK(spx_generator(1, 'w', &m) == SPX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("exchange phase through the C API") {
  const double a[3] = {-1, 0, 0}, b[3] = {1, 0, 0};
  spx_exchange_result r;
  REQUIRE(spx_exchange_phase(1, a, b, 1e-10, &r) == SPX_OK);
  CHECK(r.passed == 1);
  CHECK(std::abs(r.measured_re + 1.0) < 1e-12);
  CHECK(r.expected_re == -1.0);
  CHECK(r.has_geometry == 1);
  CHECK(r.x_hat[0] == 1.0);
  CHECK(spx_exchange_phase(1, a, a, 1e-10, &r) == SPX_ERR_DEGENERATE_GEOMETRY);
}

TEST_CASE("state handles") {
  spx_state* s = nullptr;
  REQUIRE(spx_state_create(2, 1, &s) == SPX_OK);
  const double pos[6] = {-1, 0, 0, 1, 0, 0};
  const double up_down[8] = {1, 0, 0, 0, 0, 0, 1, 0};
  REQUIRE(spx_state_add_term(s, 1.0, 0.0, pos, up_down) == SPX_OK);

  spx_state* anti = nullptr;
  REQUIRE(spx_state_symmetrize(s, -1, &anti) == SPX_OK);
  size_t count = 0;
  spx_state_term_count(anti, &count);
  CHECK(count == 2);

  spx_exchange_result r;
  REQUIRE(spx_state_verify_eq1(anti, 0, 1, 1e-10, &r) == SPX_OK);
  CHECK(r.passed == 1);
  REQUIRE(spx_state_verify_eq1(s, 0, 1, 1e-10, &r) == SPX_OK);
  CHECK(r.passed == 0);

  spx_state* exchanged = nullptr;
  REQUIRE(spx_state_apply_exchange(anti, 0, 1, &exchanged) == SPX_OK);
  spx_state_term_count(exchanged, &count);
  CHECK(count == 2);
  CHECK(spx_state_apply_exchange(anti, 0, 0, &exchanged) == SPX_ERR_DOMAIN);

  const int tilts[2] = {1, 0};
  spx_state* tilted = nullptr;
  REQUIRE(spx_state_tilt(anti, tilts, 2, &tilted) == SPX_OK);
  CHECK(spx_state_tilt(anti, tilts, 1, &tilted) == SPX_ERR_DOMAIN);

  // Same position and spinor in both slots: excluded.
  spx_state* same = nullptr;
  spx_state_create(2, 1, &same);
  const double both_up[8] = {1, 0, 0, 0, 1, 0, 0, 0};
  const double same_pos[6] = {0, 0, 0, 0, 0, 0};
  spx_state_add_term(same, 1.0, 0.0, same_pos, both_up);
  spx_state* zero = nullptr;
  REQUIRE(spx_state_symmetrize(same, -1, &zero) == SPX_OK);
  spx_state_term_count(zero, &count);
  CHECK(count == 0);

  const double not_unit[8] = {2, 0, 0, 0, 1, 0, 0, 0};
  CHECK(spx_state_add_term(same, 1.0, 0.0, same_pos, not_unit) == SPX_ERR_DOMAIN);

  for (spx_state* p : {s, anti, exchanged, tilted, same, zero}) spx_state_free(p);
}

TEST_CASE("amplitudes and tilted basis") {
  const double m[8] = {1, 0, 2, 0, 3, 0, 4, 0};
  double out[2];
  REQUIRE(spx_slater_amplitude(2, m, out) == SPX_OK);
  CHECK(std::abs(out[0] + 2.0) < 1e-14);
  REQUIRE(spx_permanent_amplitude(2, m, out) == SPX_OK);
  CHECK(out[0] == 10.0);

  double theta = 0;
  REQUIRE(spx_theta_l(2, 1, &theta) == SPX_OK);
  CHECK(theta == std::numbers::pi / 2);
  CHECK(spx_theta_l(0, 1, &theta) == SPX_ERR_DOMAIN);

  double sv = 0;
  REQUIRE(spx_tilted_min_singular_value(1, &sv) == SPX_OK);
  CHECK(std::abs(sv - 1.0) < 1e-15);

  spx_matrix* v = nullptr;
  REQUIRE(spx_chi(1, 1, &v) == SPX_OK);
  double re = 0, im = 0;
  spx_matrix_get(v, 1, 0, &re, &im);
  CHECK(std::abs(im - 1.0) < 1e-15);
  spx_matrix_free(v);

  spx_exchange_result r;
  REQUIRE(spx_verify_tilt_transfer(2, 2, 1, 1e-10, &r) == SPX_OK);
  CHECK(r.passed == 1);
}

TEST_CASE("run and render reports") {
  spx_run_config cfg;
  spx_run_config_init(&cfg);
  CHECK(cfg.tolerance == 1e-10);
  CHECK(cfg.trials == 20);
  CHECK(cfg.seed == 0);
  cfg.command = SPX_CMD_PHASE_TABLE;
  cfg.twice_spin_max = 2;

  spx_report* rep = nullptr;
  REQUIRE(spx_run(&cfg, &rep) == SPX_OK);
  int passed = 0;
  spx_report_passed(rep, &passed);
  CHECK(passed == 1);
  const char* text = nullptr;
  size_t len = 0;
  REQUIRE(spx_report_render(rep, SPX_FORMAT_CSV, &text, &len) == SPX_OK);
  CHECK(std::string(text, len).rfind("twice_spin,expected,", 0) == 0);
  CHECK(spx_report_render(rep, static_cast<spx_format>(9), &text, &len) == SPX_ERR_INVALID_ARGUMENT);
  spx_report_free(rep);

  cfg.twice_spin_max = 99;
  CHECK(spx_run(&cfg, &rep) == SPX_ERR_DOMAIN);
  cfg.twice_spin_max = 2;
  cfg.command = static_cast<spx_command>(7);
  CHECK(spx_run(&cfg, &rep) == SPX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("status strings") {
  CHECK(std::string(spx_status_string(SPX_OK)) == "ok");
  CHECK(std::string(spx_status_string(SPX_ERR_DEGENERATE_GEOMETRY)) == "degenerate geometry");
  CHECK(std::string(spx_version()) == "0.1.0");
}
