// Copyright 2026 The Welcherweg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the welcherweg simulation library.
 *
 * Every function returns a ww_status. On failure the message of the last
 * error raised on the calling thread is available from ww_last_error().
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Strings returned through char** are owned by the
 * caller and released with ww_string_free().
 */
#ifndef WELCHERWEG_H
#define WELCHERWEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(WELCHERWEG_BUILDING_LIBRARY)
#define WW_API __declspec(dllexport)
#else
#define WW_API __declspec(dllimport)
#endif
#else
#define WW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ww_status {
    WW_OK = 0,
    WW_ERR_INVALID_ARGUMENT = 1,
    WW_ERR_DIMENSION = 2,
    WW_ERR_RANK = 3,
    WW_ERR_DOMAIN = 4,
    WW_ERR_VALIDATION = 5,
    WW_ERR_IO = 6,
    WW_ERR_INTERNAL = 7
} ww_status;

typedef enum ww_model {
    WW_MODEL_UNITARY_QM = 0,
    WW_MODEL_ORTHODOX_PARTICLE = 1,
    WW_MODEL_CLASSICAL_FIELD = 2
} ww_model;

typedef enum ww_format { WW_FORMAT_CSV = 0, WW_FORMAT_JSON = 1 } ww_format;

/* Which arrivals a sweep reports; AUTO selects SYMMETRIC when the eraser is active. */
typedef enum ww_channel {
    WW_CHANNEL_AUTO = 0,
    WW_CHANNEL_ARRIVALS = 1,
    WW_CHANNEL_SYMMETRIC = 2,
    WW_CHANNEL_ANTISYMMETRIC = 3
} ww_channel;

typedef enum ww_result_kind {
    WW_RESULT_RUN_SUMMARY = 0,
    WW_RESULT_FRINGE_DATA = 1,
    WW_RESULT_PREDICTION = 2,
    WW_RESULT_DISCRIMINATION = 3,
    WW_RESULT_SCENARIO = 4
} ww_result_kind;

typedef struct ww_complex {
    double re;
    double im;
} ww_complex;

typedef struct ww_run_summary {
    uint64_t n;
    uint64_t clicks1;
    uint64_t clicks2;
    uint64_t coincidences;
    double anticoincidence_rate;
    uint64_t arrivals;
    double collector_rate;
    double theta;
    double intensity_scale;
} ww_run_summary;

typedef struct ww_prediction {
    ww_model model;
    double theta;
    double a;
    double b;
    double c;
    double collector_current;
    int interference_present;
} ww_prediction;

typedef struct ww_config ww_config;
typedef struct ww_result ww_result;

WW_API const char *ww_version(void);
WW_API const char *ww_last_error(void);
WW_API void ww_string_free(char *s);

/* Closed-form two-path quantities. a1, a2 are the arm amplitudes, theta the A-B phase. */
WW_API ww_status ww_screen_intensity(ww_complex a1, ww_complex a2, double theta, double *out);
WW_API ww_status ww_fringe_extrema(ww_complex a1, ww_complex a2, double *imax, double *imin);
WW_API ww_status ww_modulation(double alpha, double *out);
WW_API ww_status ww_visibility(double imax, double imin, double *out);
WW_API ww_status ww_predictability(ww_complex a1, ww_complex a2, double *out);
WW_API ww_status ww_duality_point(ww_complex a1, ww_complex a2, ww_complex overlap, double *predictability,
                                  double *visibility);

/* Which-path detector with pointer overlap c = <1|2>. */
WW_API ww_status ww_intensity_entangled(ww_complex a1, ww_complex a2, double theta, ww_complex overlap, double *out);
WW_API ww_status ww_collapsed_intensity(ww_complex a1, ww_complex a2, double *out);
WW_API ww_status ww_erase(ww_complex a1, ww_complex a2, double theta, ww_complex overlap, ww_complex w1,
                          ww_complex w2, double *out);
WW_API ww_status ww_erasure_decomposition(ww_complex a1, ww_complex a2, double theta, double *fringe,
                                          double *antifringe);

/* Experiment configurations. */
WW_API ww_status ww_config_parse(const char *text, size_t length, ww_config **out);
WW_API ww_status ww_config_load(const char *path, ww_config **out);
WW_API void ww_config_free(ww_config *config);
WW_API ww_status ww_config_set_seed(ww_config *config, uint64_t seed);
WW_API ww_status ww_config_get_seed(const ww_config *config, uint64_t *seed);
WW_API ww_status ww_config_set_shots(ww_config *config, uint64_t shots);
WW_API ww_status ww_config_get_shots(const ww_config *config, uint64_t *shots);
/* Model named in the file, or unitary-qm when absent. */
WW_API ww_status ww_config_get_model(const ww_config *config, ww_model *model);
WW_API ww_status ww_config_set_model(ww_config *config, ww_model model);
/* Sweep grid from theta_sweep, or 32 points over [0, 2 pi) when the file has none. */
WW_API ww_status ww_config_sweep_grid(const ww_config *config, double *grid, size_t capacity, size_t *count);
WW_API ww_status ww_config_emit(const ww_config *config, char **text, size_t *length);
WW_API ww_status ww_model_parse(const char *name, ww_model *model);

/* Simulations and predictions. Each produces a result handle. */
WW_API ww_status ww_run(const ww_config *config, ww_model model, uint64_t shots, uint64_t seed, ww_result **out);
WW_API ww_status ww_sweep(const ww_config *config, ww_model model, const double *theta_grid, size_t points,
                          uint64_t shots_per_point, uint64_t seed, ww_channel channel, ww_result **out);
WW_API ww_status ww_predict(const ww_config *config, ww_model model, ww_result **out);
WW_API ww_status ww_discriminate(const ww_config *config, ww_result **out);
/* name is "biprism" or "mach_zehnder"; theta is ignored for biprism. */
WW_API ww_status ww_scenario(const char *name, double theta, double tolerance, ww_result **out);

WW_API ww_status ww_result_kind_of(const ww_result *result, ww_result_kind *kind);
WW_API ww_status ww_result_run_summary(const ww_result *result, ww_run_summary *out);
WW_API ww_status ww_result_fringe_size(const ww_result *result, size_t *points);
WW_API ww_status ww_result_fringe_point(const ww_result *result, size_t index, double *theta, double *mean_intensity,
                                        double *stderr_out);
WW_API ww_status ww_result_fringe_visibility(const ww_result *result, double *estimate, double *stderr_out,
                                             int *degenerate);
WW_API ww_status ww_result_prediction(const ww_result *result, ww_prediction *out);
WW_API ww_status ww_result_discrimination(const ww_result *result, ww_prediction *unitary, ww_prediction *orthodox,
                                          double *difference, int *discriminating);
/* Scenario results: 1 when the classification matches the scenario's expected pairs. */
WW_API ww_status ww_result_scenario_matches(const ww_result *result, int *matches);
WW_API ww_status ww_result_emit(const ww_result *result, ww_format format, char **text, size_t *length);
WW_API void ww_result_free(ww_result *result);

#ifdef __cplusplus
}
#endif

#endif /* WELCHERWEG_H */
