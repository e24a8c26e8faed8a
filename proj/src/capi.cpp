#include "spinex/spinex.h"

#include <array>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "spinex/amplitudes.hpp"
#include "spinex/error.hpp"
#include "spinex/exchange.hpp"
#include "spinex/report.hpp"
#include "spinex/spin_algebra.hpp"
#include "spinex/tilted_basis.hpp"

struct spx_matrix {
  spinex::CMatrix value;
};

struct spx_state {
  spinex::MultiParticleState value;
};

struct spx_report {
  spinex::Report value;
  std::array<std::string, 3> rendered;
  std::array<bool, 3> have{};
};

namespace {

thread_local std::string g_last_error;

spx_status to_status(spinex::ErrorCode code) {
  switch (code) {
    case spinex::ErrorCode::kOk: return SPX_OK;
    case spinex::ErrorCode::kDomain: return SPX_ERR_DOMAIN;
    case spinex::ErrorCode::kDegenerateGeometry: return SPX_ERR_DEGENERATE_GEOMETRY;
    case spinex::ErrorCode::kIdenticalSetViolation: return SPX_ERR_IDENTICAL_SET_VIOLATION;
    case spinex::ErrorCode::kInternalConsistency: return SPX_ERR_INTERNAL;
    case spinex::ErrorCode::kIo: return SPX_ERR_IO;
  }
  return SPX_ERR_INTERNAL;
}

template <class F>
spx_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return SPX_OK;
  } catch (const spinex::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SPX_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPX_ERR_INTERNAL;
  }
}

spx_status invalid(const char* what) {
  g_last_error = what;
  return SPX_ERR_INVALID_ARGUMENT;
}

spinex::Vec3 vec3(const double* p) { return {p[0], p[1], p[2]}; }

void store(const double* src, double* dst) {
  dst[0] = src[0];
  dst[1] = src[1];
  dst[2] = src[2];
}

void fill(const spinex::ExchangeReport& r, spx_exchange_result* out) {
  *out = spx_exchange_result{};
  out->twice_spin = r.spin.twice_spin();
  out->measured_re = r.measured_phase.real();
  out->measured_im = r.measured_phase.imag();
  out->expected_re = r.expected_phase.real();
  out->expected_im = r.expected_phase.imag();
  out->residual = r.residual;
  out->tolerance = r.tolerance;
  out->passed = r.passed ? 1 : 0;
  if (r.geometry) {
    out->has_geometry = 1;
    store(r.geometry->origin.data(), out->origin);
    store(r.geometry->x_hat.data(), out->x_hat);
    store(r.geometry->y_hat.data(), out->y_hat);
    store(r.geometry->z_hat.data(), out->z_hat);
  }
}

spinex::CMatrix read_square(size_t n, const double* m) {
  spinex::CMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = {m[2 * (i * n + j)], m[2 * (i * n + j) + 1]};
  return out;
}

int format_index(spx_format f) { return static_cast<int>(f); }

}  // namespace

extern "C" {

const char* spx_version(void) { return "0.1.0"; }

const char* spx_last_error(void) { return g_last_error.c_str(); }

const char* spx_status_string(spx_status status) {
  switch (status) {
    case SPX_OK: return "ok";
    case SPX_ERR_DOMAIN: return "domain error";
    case SPX_ERR_DEGENERATE_GEOMETRY: return "degenerate geometry";
    case SPX_ERR_IDENTICAL_SET_VIOLATION: return "identical-set violation";
    case SPX_ERR_INTERNAL: return "internal error";
    case SPX_ERR_IO: return "i/o error";
    case SPX_ERR_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

spx_status spx_rotation(const double axis[3], double angle, int twice_spin, spx_matrix** out) {
  if (!axis || !out) return invalid("null argument");
  return guarded([&] {
    *out = new spx_matrix{spinex::rotation(vec3(axis), angle, spinex::make_spin(twice_spin)).entries};
  });
}

spx_status spx_exact_pi_z_rotation(int twice_spin, spx_matrix** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new spx_matrix{spinex::exact_pi_z_rotation(spinex::make_spin(twice_spin)).entries}; });
}

spx_status spx_generator(int twice_spin, char component, spx_matrix** out) {
  if (!out) return invalid("null argument");
  if (component != 'x' && component != 'y' && component != 'z') return invalid("component must be x, y or z");
  return guarded([&] {
    const auto ops = spinex::generators(spinex::make_spin(twice_spin));
    *out = new spx_matrix{component == 'x' ? ops.sx : component == 'y' ? ops.sy : ops.sz};
  });
}

spx_status spx_matrix_dim(const spx_matrix* m, size_t* rows, size_t* cols) {
  if (!m || !rows || !cols) return invalid("null argument");
  *rows = static_cast<size_t>(m->value.rows());
  *cols = static_cast<size_t>(m->value.cols());
  return SPX_OK;
}

spx_status spx_matrix_get(const spx_matrix* m, size_t row, size_t col, double* re, double* im) {
  if (!m || !re || !im) return invalid("null argument");
  if (row >= static_cast<size_t>(m->value.rows()) || col >= static_cast<size_t>(m->value.cols())) {
    g_last_error = "matrix index out of range";
    return SPX_ERR_DOMAIN;
  }
  const auto v = m->value(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  *re = v.real();
  *im = v.imag();
  return SPX_OK;
}

void spx_matrix_free(spx_matrix* m) { delete m; }

spx_status spx_exchange_phase(int twice_spin, const double a[3], const double b[3], double tolerance,
                              spx_exchange_result* out) {
  if (!a || !b || !out) return invalid("null argument");
  return guarded([&] { fill(spinex::exchange_phase(spinex::make_spin(twice_spin), vec3(a), vec3(b), tolerance), out); });
}

spx_status spx_state_create(size_t n, int twice_spin, spx_state** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    *out = new spx_state{spinex::MultiParticleState(std::vector<spinex::SpinValue>(n, spinex::make_spin(twice_spin)))};
  });
}

spx_status spx_state_add_term(spx_state* state, double coeff_re, double coeff_im, const double* positions,
                              const double* spinors) {
  if (!state || !positions || !spinors) return invalid("null argument");
  return guarded([&] {
    const std::size_t n = state->value.size();
    spinex::ProductTerm term{{coeff_re, coeff_im}, {}, {}};
    const double* cursor = spinors;
    for (std::size_t j = 0; j < n; ++j) {
      term.positions.push_back(vec3(positions + 3 * j));
      const int dim = state->value.spins()[j].dimension();
      spinex::CVector v(dim);
      for (int k = 0; k < dim; ++k, cursor += 2) v(k) = {cursor[0], cursor[1]};
      // Same per-slot rules as a ParticleSet: correct dimension, unit norm.
      spinex::ParticleSet(term.positions.back(), state->value.spins()[j], v);
      term.spinors.push_back(std::move(v));
    }
    state->value.add_term(std::move(term));
  });
}

spx_status spx_state_term_count(const spx_state* state, size_t* out) {
  if (!state || !out) return invalid("null argument");
  *out = state->value.terms().size();
  return SPX_OK;
}

spx_status spx_state_apply_exchange(const spx_state* state, size_t a, size_t b, spx_state** out) {
  if (!state || !out) return invalid("null argument");
  return guarded([&] { *out = new spx_state{spinex::apply_exchange(state->value, a, b)}; });
}

spx_status spx_state_symmetrize(const spx_state* state, int sign, spx_state** out) {
  if (!state || !out) return invalid("null argument");
  return guarded([&] { *out = new spx_state{spinex::symmetrize(state->value, sign)}; });
}

spx_status spx_state_verify_eq1(const spx_state* state, size_t a, size_t b, double tolerance,
                                spx_exchange_result* out) {
  if (!state || !out) return invalid("null argument");
  return guarded([&] { fill(spinex::verify_eq1(state->value, a, b, tolerance), out); });
}

spx_status spx_state_tilt(const spx_state* state, const int* l_list, size_t count, spx_state** out) {
  if (!state || !out || (!l_list && count > 0)) return invalid("null argument");
  return guarded([&] { *out = new spx_state{spinex::tilt_multi(state->value, std::span<const int>(l_list, count))}; });
}

void spx_state_free(spx_state* state) { delete state; }

spx_status spx_slater_amplitude(size_t n, const double* matrix, double out[2]) {
  if ((!matrix && n > 0) || !out) return invalid("null argument");
  return guarded([&] {
    const auto v = spinex::slater_amplitude(read_square(n, matrix));
    out[0] = v.real();
    out[1] = v.imag();
  });
}

spx_status spx_permanent_amplitude(size_t n, const double* matrix, double out[2]) {
  if ((!matrix && n > 0) || !out) return invalid("null argument");
  return guarded([&] {
    const auto v = spinex::permanent_amplitude(read_square(n, matrix));
    out[0] = v.real();
    out[1] = v.imag();
  });
}

spx_status spx_theta_l(int twice_spin, int l, double* out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = spinex::theta_l(spinex::make_spin(twice_spin), l); });
}

spx_status spx_chi(int twice_spin, int l, spx_matrix** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new spx_matrix{spinex::chi(spinex::make_spin(twice_spin), l).vector}; });
}

spx_status spx_tilted_min_singular_value(int twice_spin, double* out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = spinex::tilted_gram(spinex::make_spin(twice_spin)).min_singular_value; });
}

spx_status spx_verify_tilt_transfer(int twice_spin, int la, int lb, double tolerance, spx_exchange_result* out) {
  if (!out) return invalid("null argument");
  return guarded([&] { fill(spinex::verify_tilt_transfer(spinex::make_spin(twice_spin), la, lb, tolerance), out); });
}

void spx_run_config_init(spx_run_config* cfg) {
  if (!cfg) return;
  const spinex::RunConfig defaults;
  cfg->command = SPX_CMD_VERIFY_ALL;
  cfg->twice_spin_max = defaults.twice_spin_max;
  cfg->tolerance = defaults.tolerance;
  cfg->seed = defaults.random_seed;
  cfg->trials = defaults.geometry_trials;
}

spx_status spx_run(const spx_run_config* cfg, spx_report** out) {
  if (!cfg || !out) return invalid("null argument");
  spinex::RunConfig rc;
  switch (cfg->command) {
    case SPX_CMD_PHASE_TABLE: rc.command = spinex::Command::kPhaseTable; break;
    case SPX_CMD_VERIFY_ALL: rc.command = spinex::Command::kVerifyAll; break;
    case SPX_CMD_TILTED: rc.command = spinex::Command::kTilted; break;
    default: return invalid("unknown command");
  }
  rc.twice_spin_max = cfg->twice_spin_max;
  rc.tolerance = cfg->tolerance;
  rc.random_seed = cfg->seed;
  rc.geometry_trials = cfg->trials;
  return guarded([&] { *out = new spx_report{spinex::run_command(rc), {}, {}}; });
}

spx_status spx_report_passed(const spx_report* report, int* passed) {
  if (!report || !passed) return invalid("null argument");
  *passed = report->value.passed ? 1 : 0;
  return SPX_OK;
}

spx_status spx_report_render(spx_report* report, spx_format format, const char** text, size_t* length) {
  if (!report || !text) return invalid("null argument");
  if (format != SPX_FORMAT_JSON && format != SPX_FORMAT_CSV && format != SPX_FORMAT_TEXT) {
    return invalid("unknown format");
  }
  return guarded([&] {
    const int k = format_index(format);
    if (!report->have[k]) {
      report->rendered[k] = spinex::render(report->value, static_cast<spinex::OutputFormat>(k));
      report->have[k] = true;
    }
    *text = report->rendered[k].c_str();
    if (length) *length = report->rendered[k].size();
  });
}

void spx_report_free(spx_report* report) { delete report; }

}  // extern "C"
