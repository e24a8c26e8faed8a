/*
 * C interface to the spinex library.
 *
 * Every function returns an spx_status. On failure a description of the last
 * error on the calling thread is available from spx_last_error(). Objects
 * returned through out-parameters are owned by the caller and released with
 * the matching *_free function. Spin is always passed as the integer 2s.
 * Complex numbers are passed as interleaved (re, im) doubles; matrices are
 * row-major.
 */
#ifndef SPINEX_SPINEX_H
#define SPINEX_SPINEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SPINEX_BUILDING_LIBRARY)
#define SPX_API __declspec(dllexport)
#else
#define SPX_API __declspec(dllimport)
#endif
#else
#define SPX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spx_status {
  SPX_OK = 0,
  SPX_ERR_DOMAIN = 1,
  SPX_ERR_DEGENERATE_GEOMETRY = 2,
  SPX_ERR_IDENTICAL_SET_VIOLATION = 3,
  SPX_ERR_INTERNAL = 4,
  SPX_ERR_IO = 5,
  SPX_ERR_INVALID_ARGUMENT = 6 /* null pointer, bad enum value */
} spx_status;

typedef enum spx_command {
  SPX_CMD_PHASE_TABLE = 0,
  SPX_CMD_VERIFY_ALL = 1,
  SPX_CMD_TILTED = 2
} spx_command;

typedef enum spx_format { SPX_FORMAT_JSON = 0, SPX_FORMAT_CSV = 1, SPX_FORMAT_TEXT = 2 } spx_format;

typedef struct spx_matrix spx_matrix;
typedef struct spx_state spx_state;
typedef struct spx_report spx_report;

typedef struct spx_exchange_result {
  int twice_spin;
  double measured_re;
  double measured_im;
  double expected_re;
  double expected_im;
  double residual;
  double tolerance;
  int passed;
  /* Midpoint frame used; valid when has_geometry != 0. */
  int has_geometry;
  double origin[3];
  double x_hat[3];
  double y_hat[3];
  double z_hat[3];
} spx_exchange_result;

typedef struct spx_run_config {
  spx_command command;
  int twice_spin_max;
  double tolerance;
  uint64_t seed;
  int trials;
} spx_run_config;

SPX_API const char* spx_version(void);
SPX_API const char* spx_last_error(void);
SPX_API const char* spx_status_string(spx_status status);

/* Spin algebra */
SPX_API spx_status spx_rotation(const double axis[3], double angle, int twice_spin, spx_matrix** out);
SPX_API spx_status spx_exact_pi_z_rotation(int twice_spin, spx_matrix** out);
SPX_API spx_status spx_generator(int twice_spin, char component /* 'x','y','z' */, spx_matrix** out);
SPX_API spx_status spx_matrix_dim(const spx_matrix* m, size_t* rows, size_t* cols);
SPX_API spx_status spx_matrix_get(const spx_matrix* m, size_t row, size_t col, double* re, double* im);
SPX_API void spx_matrix_free(spx_matrix* m);

/* Exchange */
SPX_API spx_status spx_exchange_phase(int twice_spin, const double a[3], const double b[3], double tolerance,
                                      spx_exchange_result* out);

/* Multi-particle states. All slots of a state created here share one spin. */
SPX_API spx_status spx_state_create(size_t n, int twice_spin, spx_state** out);
/* positions: 3n doubles; spinors: n * (2s+1) complex entries, slot-major. */
SPX_API spx_status spx_state_add_term(spx_state* state, double coeff_re, double coeff_im, const double* positions,
                                      const double* spinors);
SPX_API spx_status spx_state_term_count(const spx_state* state, size_t* out);
SPX_API spx_status spx_state_apply_exchange(const spx_state* state, size_t a, size_t b, spx_state** out);
SPX_API spx_status spx_state_symmetrize(const spx_state* state, int sign, spx_state** out);
SPX_API spx_status spx_state_verify_eq1(const spx_state* state, size_t a, size_t b, double tolerance,
                                        spx_exchange_result* out);
SPX_API spx_status spx_state_tilt(const spx_state* state, const int* l_list, size_t count, spx_state** out);
SPX_API void spx_state_free(spx_state* state);

/* Amplitudes: n x n row-major complex matrix. */
SPX_API spx_status spx_slater_amplitude(size_t n, const double* matrix, double out[2]);
SPX_API spx_status spx_permanent_amplitude(size_t n, const double* matrix, double out[2]);

/* Tilted basis */
SPX_API spx_status spx_theta_l(int twice_spin, int l, double* out);
SPX_API spx_status spx_chi(int twice_spin, int l, spx_matrix** out /* column vector */);
SPX_API spx_status spx_tilted_min_singular_value(int twice_spin, double* out);
SPX_API spx_status spx_verify_tilt_transfer(int twice_spin, int la, int lb, double tolerance,
                                            spx_exchange_result* out);

/* Commands and reports */
SPX_API void spx_run_config_init(spx_run_config* cfg);
SPX_API spx_status spx_run(const spx_run_config* cfg, spx_report** out);
SPX_API spx_status spx_report_passed(const spx_report* report, int* passed);
/* The returned text is owned by the report and valid until it is freed. */
SPX_API spx_status spx_report_render(spx_report* report, spx_format format, const char** text, size_t* length);
SPX_API void spx_report_free(spx_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SPINEX_SPINEX_H */
