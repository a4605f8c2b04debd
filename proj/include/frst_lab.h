/*
 * Copyright 2026 The frst-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FRST_LAB_H
#define FRST_LAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(FRST_LAB_BUILDING)
#define FRST_API __attribute__((visibility("default")))
#else
#define FRST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every call that can fail returns one of these and leaves a
 * message for frst_last_error() on the calling thread. */
typedef enum frst_status {
  FRST_OK = 0,
  FRST_E_RANGE,
  FRST_E_DEGENERATE_ORDER,
  FRST_E_NEAR_SINGULAR_ORDER,
  FRST_E_GRID_MISMATCH,
  FRST_E_ZERO_FREQUENCY,
  FRST_E_INSUFFICIENT_RADIUS,
  FRST_E_BAD_INTERVAL,
  FRST_E_EMPTY_FAMILY,
  FRST_E_UNRESOLVABLE_SCALE,
  FRST_E_NONPOSITIVE_WEIGHT,
  FRST_E_BAD_EXPONENT,
  FRST_E_NEGATIVE_INPUT,
  FRST_E_WEIGHT_CERTIFICATE,
  FRST_E_CONFIG,
  FRST_E_PARSE,
  FRST_E_NONUNIFORM_GRID,
  FRST_E_UNSUPPORTED_FORMAT,
  FRST_E_IO,
  FRST_E_INVALID_ARGUMENT,
  FRST_E_INTERNAL
} frst_status;

FRST_API const char* frst_status_name(frst_status status);
/* Message of the last failure on this thread; "" if none. */
FRST_API const char* frst_last_error(void);
FRST_API const char* frst_version(void);

typedef struct frst_signal frst_signal;
typedef struct frst_tf frst_tf;

enum { FRST_FORMAT_AUTO = 0, FRST_FORMAT_CSV = 1, FRST_FORMAT_WAV = 2 };
enum { FRST_MODE_FAST = 0, FRST_MODE_DIRECT = 1 };
enum { FRST_WEIGHT_CONST = 0, FRST_WEIGHT_POLY = 1 };

/* ---- signals */

FRST_API frst_status frst_signal_load(const char* path, int format, frst_signal** out);
/* im may be NULL for a real signal. */
FRST_API frst_status frst_signal_create(double start, double step, size_t count,
                                        const double* re, const double* im,
                                        frst_signal** out);
FRST_API void frst_signal_free(frst_signal* signal);
FRST_API size_t frst_signal_count(const frst_signal* signal);
FRST_API double frst_signal_start(const frst_signal* signal);
FRST_API double frst_signal_step(const frst_signal* signal);
/* Copies count samples into re and im (either may be NULL). */
FRST_API frst_status frst_signal_values(const frst_signal* signal, double* re, double* im);
FRST_API frst_status frst_signal_save(const frst_signal* signal, const char* path);

/* ---- transforms */

typedef struct frst_transform_params {
  double a;
  double k;
  double p;
  /* xi_count == 0 selects the positive FFT bins of the input grid. */
  double xi_min;
  double xi_max;
  size_t xi_count;
  /* FRST_MODE_FAST or FRST_MODE_DIRECT. For the S-transform, fast means
   * the Fourier-domain evaluation. */
  int mode;
} frst_transform_params;

/* a = 1, k = p = 1, default xi bins, fast mode. */
FRST_API void frst_transform_params_init(frst_transform_params* params);

/* Fractional S-transform on the signal's own time grid. */
FRST_API frst_status frst_transform(const frst_signal* signal,
                                    const frst_transform_params* params, frst_tf** out);
/* Classical S-transform; uses k, the xi selection and mode only. */
FRST_API frst_status frst_stransform(const frst_signal* signal,
                                     const frst_transform_params* params, frst_tf** out);

FRST_API void frst_tf_free(frst_tf* tf);
FRST_API size_t frst_tf_rows(const frst_tf* tf);
FRST_API size_t frst_tf_cols(const frst_tf* tf);
FRST_API frst_status frst_tf_value(const frst_tf* tf, size_t row, size_t col, double* re,
                                   double* im);
FRST_API double frst_tf_xi(const frst_tf* tf, size_t row);
FRST_API double frst_tf_tau(const frst_tf* tf, size_t col);
/* frst_re.csv, frst_im.csv, frst_abs.csv and frst_abs.pgm in dir. */
FRST_API frst_status frst_tf_emit(const frst_tf* tf, const char* dir);
/* Reads a matrix written by frst_tf_emit; a, k, p are not stored there. */
FRST_API frst_status frst_tf_load(const char* dir, double a, double k, double p,
                                  frst_tf** out);
/* Inverse through the marginal. count == 0 evaluates on the tau grid. */
FRST_API frst_status frst_inverse(const frst_tf* tf, double start, double step,
                                  size_t count, frst_signal** out);

/* ---- norms */

typedef struct frst_weight {
  int kind; /* FRST_WEIGHT_CONST or FRST_WEIGHT_POLY */
  double s; /* polynomial exponent */
  /* Certificate constants; C <= 0 or N <= 0 keeps the kind's default
   * ((1, 0.5) for const, (1, s) for poly). */
  double C;
  double N;
} frst_weight;

typedef struct frst_norms {
  double bmo;
  double hardy;
  double bmo_kappa;
  double hardy_kappa;
  double l1_kappa;
  double m;
} frst_norms;

/* max_intervals == 0 uses the suite default. */
FRST_API frst_status frst_compute_norms(const frst_signal* signal, const frst_weight* weight,
                                        size_t max_intervals, frst_norms* out);

/* ---- verification harness */

typedef struct frst_suite_config {
  uint64_t seed;
  size_t signal_count;
  size_t nonneg_count;
  size_t samples;
  double half_width;
  double k;
  double p;
  double slack;
  size_t max_intervals;
  size_t parameter_draws;
  size_t invariant_signals;
  /* NULL / 0 keeps the default orders {0.4, 0.8, 1, 1.6} and
   * frequencies {0.5, 1, 2}. */
  const double* orders;
  size_t order_count;
  const double* xis;
  size_t xi_count;
  /* Nonzero replaces the default weights {1, 1+|x|, (1+|x|)^2}. */
  int use_weight;
  frst_weight weight;
} frst_suite_config;

typedef struct frst_suite_summary {
  size_t total;
  size_t failed;
  int passed;
} frst_suite_summary;

FRST_API void frst_suite_config_init(frst_suite_config* config);
/* Runs the suite and writes the JSON report to report_path (NULL skips it). */
FRST_API frst_status frst_verify(const frst_suite_config* config, const char* report_path,
                                 frst_suite_summary* summary);
/* Writes every corpus signal of the suite as CSV into dir. */
FRST_API frst_status frst_demo(const frst_suite_config* config, const char* dir,
                               size_t* written);

#ifdef __cplusplus
}
#endif

#endif /* FRST_LAB_H */
