// Copyright 2026 The femtobb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the femtocell backhaul bandwidth broker and simulator.
 *
 * Objects are opaque handles created by `*_create`/`*_load` functions and
 * released with the matching `*_destroy`. Every fallible call returns an
 * fbb_status; on failure fbb_last_error() holds a message for the calling
 * thread until its next failing call. Bandwidths are kbps, times seconds.
 */
#ifndef FEMTOBB_FEMTOBB_H_
#define FEMTOBB_FEMTOBB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FBB_BUILDING_LIBRARY)
#define FBB_API __attribute__((visibility("default")))
#else
#define FBB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fbb_status {
  FBB_OK = 0,
  FBB_ERR_INVALID_ARGUMENT = 1, /* bad argument or usage */
  FBB_ERR_CONFIG = 2,           /* unreadable or invalid scenario config */
  FBB_ERR_IO = 3,               /* output could not be written */
  FBB_ERR_DATA = 4,             /* malformed input data (results CSV) */
  FBB_ERR_BUFFER_TOO_SMALL = 5, /* required size reported via out-param */
  FBB_ERR_INTERNAL = 6
} fbb_status;

/* Scheme bit flags; combine with | to select several. */
enum {
  FBB_SCHEME_TRADITIONAL = 1u << 0,
  FBB_SCHEME_PROPOSED = 1u << 1,
  FBB_SCHEME_BOTH = FBB_SCHEME_TRADITIONAL | FBB_SCHEME_PROPOSED
};

typedef struct fbb_config fbb_config;
typedef struct fbb_window fbb_window;

typedef struct fbb_allocation {
  double grant_femto;
  double femto_served;
  double bg_served;
  double borrowed;
  double sl;
} fbb_allocation;

typedef struct fbb_summary_row {
  unsigned scheme; /* FBB_SCHEME_TRADITIONAL or FBB_SCHEME_PROPOSED */
  double arbit_kbps;
  double mean_sl;
  double std_sl;
  double mean_util;
  double std_util;
  unsigned replications;
} fbb_summary_row;

FBB_API const char* fbb_version(void);
FBB_API const char* fbb_last_error(void);
FBB_API const char* fbb_status_string(fbb_status status);

/* ---- allocation model (pure) ---- */

/* Negative or NaN arguments are treated as zero. */
FBB_API double fbb_available_bandwidth(double capacity, double b_i);
FBB_API double fbb_satisfaction_level(double b_a, double b_f);
FBB_API double fbb_borrowed_bandwidth(double b_r, double b_a);
FBB_API fbb_status fbb_allocate_traditional(double capacity, double b_i, double b_f,
                                            fbb_allocation* out);
/* FBB_ERR_INVALID_ARGUMENT if b_r exceeds capacity. */
FBB_API fbb_status fbb_allocate_proposed(double capacity, double b_i, double b_f, double b_r,
                                         fbb_allocation* out);
FBB_API fbb_status fbb_utilization(const fbb_allocation* alloc, double capacity, double* out);

/* ---- reservation window / broker ---- */

/* reserve_cap <= 0 means "no cap below capacity" and is replaced by +inf. */
FBB_API fbb_status fbb_window_create(double t1_s, double period_s, unsigned m, double reserve_cap,
                                     fbb_window** out);
FBB_API void fbb_window_destroy(fbb_window* window);
FBB_API fbb_status fbb_window_push(fbb_window* window, double b_f);
/* Capped window mean: the reservation for the current instant. */
FBB_API fbb_status fbb_window_reserve(const fbb_window* window, double* out);
FBB_API size_t fbb_window_size(const fbb_window* window);

/* ---- scenario configuration ---- */

FBB_API fbb_status fbb_config_default(fbb_config** out);
FBB_API fbb_status fbb_config_parse(const char* json_text, fbb_config** out);
FBB_API fbb_status fbb_config_load(const char* path, fbb_config** out);
FBB_API void fbb_config_destroy(fbb_config* config);
/* Writes NUL-terminated JSON into buf. *needed receives the size including
 * the terminator; FBB_ERR_BUFFER_TOO_SMALL if capacity is insufficient. */
FBB_API fbb_status fbb_config_to_json(const fbb_config* config, char* buf, size_t capacity,
                                      size_t* needed);
FBB_API fbb_status fbb_config_set_arbit(fbb_config* config, double arbit_kbps);
FBB_API fbb_status fbb_config_set_base_seed(fbb_config* config, uint64_t seed);
FBB_API fbb_status fbb_config_set_replications(fbb_config* config, unsigned replications);
FBB_API fbb_status fbb_config_set_run_length(fbb_config* config, double duration_s,
                                             double warmup_s);

/* ---- experiments ---- */

/* Runs the selected schemes over the configured replications. Rows are
 * written in canonical order (traditional first); *count receives the number
 * of rows, and FBB_ERR_BUFFER_TOO_SMALL is returned if capacity < *count. */
FBB_API fbb_status fbb_run_experiment(const fbb_config* config, unsigned schemes,
                                      fbb_summary_row* rows, size_t capacity, size_t* count);

/* `run` subcommand. summary_csv NULL or "" writes to stdout; timeseries_csv
 * and history_csv are optional. */
FBB_API fbb_status fbb_run(const fbb_config* config, unsigned schemes, const char* summary_csv,
                           const char* timeseries_csv, const char* history_csv);

/* `sweep` subcommand over ARBIT levels start, start+step, ..., <= stop. */
FBB_API fbb_status fbb_sweep(const fbb_config* config, double start_kbps, double stop_kbps,
                             double step_kbps, unsigned schemes, const char* out_csv);

/* Parses "start:stop:step" for fbb_sweep. */
FBB_API fbb_status fbb_parse_arbit_range(const char* text, double* start, double* stop,
                                         double* step);
/* Parses "traditional", "proposed", "both" or a comma list into flags. */
FBB_API fbb_status fbb_parse_schemes(const char* text, unsigned* schemes);

/* `report` subcommand: sweep CSV in, SVG charts + summary.txt out. */
FBB_API fbb_status fbb_report(const char* sweep_csv, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* FEMTOBB_FEMTOBB_H_ */
