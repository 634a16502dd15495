/*
   Copyright 2026 The lhoro Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to lhoro.
 *
 * Every fallible call returns an lh_status; on failure lh_last_error() holds
 * a message for the calling thread until its next failing call. Objects are
 * opaque handles released with their *_free function. Strings returned
 * through char** are JSON documents owned by the caller (lh_string_free).
 * Infinite values inside JSON documents are written as the string "inf".
 */

#ifndef LHORO_LHORO_H
#define LHORO_LHORO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LHORO_BUILDING_LIBRARY)
#    define LH_API __declspec(dllexport)
#  else
#    define LH_API __declspec(dllimport)
#  endif
#else
#  define LH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lh_status {
  LH_OK = 0,
  LH_CONTRACT_VIOLATION = 1,
  LH_NUMERICAL_DEGENERACY = 2,
  LH_EVALUATION_ERROR = 3,
  LH_PARSE_ERROR = 4,
  LH_INTERNAL_ERROR = 5
} lh_status;

/* Fricke trace triple: traces of the curves 0/1, 1/0 and 1/1. */
typedef struct lh_point {
  double x, y, z;
} lh_point;

/* Simple closed curve p/q (primitive vector, any sign). */
typedef struct lh_slope {
  int64_t p, q;
} lh_slope;

/* [[a, b], [c, d]] with determinant +-1. */
typedef struct lh_matrix {
  int64_t a, b, c, d;
} lh_matrix;

/* Measured lamination on the torus: projective slope (a : b) and weight. */
typedef struct lh_lamination {
  double a, b, weight;
} lh_lamination;

typedef struct lh_distance {
  double value;
  lh_slope witness;
  double error_estimate;
  int refined;
} lh_distance;

typedef enum lh_sequence_kind { LH_SEQ_TWIST = 0, LH_SEQ_PA = 1 } lh_sequence_kind;

/* x_n = T_curve^n . base (twist) or matrix^n . base (pa), n = 0..n_max. */
typedef struct lh_sequence {
  lh_sequence_kind kind;
  lh_slope curve;
  lh_matrix matrix;
  int n_max;
} lh_sequence;

typedef struct lh_config lh_config;
typedef struct lh_digraph lh_digraph;
typedef struct lh_formal lh_formal;
typedef struct lh_model lh_model;

LH_API const char* lh_version(void);
LH_API const char* lh_last_error(void);
LH_API const char* lh_status_name(lh_status status);
LH_API void lh_string_free(char* s);

/* Run configuration: base (3,3,3), depth 2000, tol 1e-8, format json, seed 42. */
LH_API lh_status lh_config_new(lh_config** out);
LH_API void lh_config_free(lh_config* cfg);
/* Keys: base ("x,y,z"), depth, tol, format (json|csv), seed. */
LH_API lh_status lh_config_set(lh_config* cfg, const char* key, const char* value);
LH_API lh_status lh_config_load(lh_config* cfg, const char* path);
LH_API lh_status lh_config_base(const lh_config* cfg, lh_point* out);
LH_API lh_status lh_config_depth(const lh_config* cfg, int64_t* out);
LH_API lh_status lh_config_seed(const lh_config* cfg, uint64_t* out);
/* Borrowed pointer, valid until the next change to cfg. */
LH_API lh_status lh_config_format(const lh_config* cfg, const char** out);
LH_API lh_status lh_config_to_json(const lh_config* cfg, char** out);

/* Torus geometry. */
LH_API lh_status lh_teich_from_xy(double x, double y, int plus_branch, lh_point* out);
LH_API lh_status lh_point_validate(lh_point pt);
LH_API lh_status lh_point_from_json(const char* text, lh_point* out);
LH_API lh_status lh_curve_trace(lh_point pt, lh_slope c, double* out);
LH_API lh_status lh_curve_length(lh_point pt, lh_slope c, double* out);
LH_API lh_status lh_intersection(lh_lamination mu, lh_slope c, double* out);
LH_API lh_status lh_lipschitz_distance(const lh_config* cfg, lh_point x, lh_point y, lh_distance* out);
/* Psi_mu(x) with the configured base point. */
LH_API lh_status lh_horofunction(const lh_config* cfg, lh_lamination mu, lh_point x, double* value,
                                 double* error_estimate);
LH_API lh_status lh_mcg_apply(lh_matrix g, lh_point pt, lh_point* out);
LH_API lh_status lh_mcg_apply_slope(lh_matrix g, lh_slope c, lh_slope* out);
LH_API lh_status lh_twist_matrix(lh_slope c, lh_matrix* out);

/* Weighted digraphs: "base v" header, then "u v w" lines. */
LH_API lh_status lh_digraph_parse(const char* text, lh_digraph** out);
LH_API lh_status lh_digraph_load(const char* path, lh_digraph** out);
LH_API void lh_digraph_free(lh_digraph* g);
LH_API lh_status lh_digraph_vertex_count(const lh_digraph* g, size_t* out);
LH_API lh_status lh_digraph_distance(const lh_digraph* g, size_t u, size_t v, double* out);

/* Formal laminations over named ergodic components, and test-curve models. */
LH_API lh_status lh_formal_from_json(const char* text, lh_formal** out);
LH_API void lh_formal_free(lh_formal* mu);
LH_API lh_status lh_model_from_json(const char* text, lh_model** out);
LH_API void lh_model_free(lh_model* m);
LH_API lh_status lh_detour_cost_closed(const lh_formal* beta, const lh_formal* sigma,
                                       const lh_model* model, double* out);
LH_API lh_status lh_detour_metric_closed(const lh_formal* sigma, const lh_formal* beta, double* out);

/* Reports (JSON). */
LH_API lh_status lh_report_dist(const lh_config* cfg, lh_point x, lh_point y, char** out);
LH_API lh_status lh_report_horo(const lh_config* cfg, lh_lamination mu, lh_point x, char** out);
LH_API lh_status lh_report_maxset(const lh_config* cfg, lh_point x, lh_point y, size_t limit, char** out);
/* probes may be NULL for the default five-point set. */
LH_API lh_status lh_report_converge(const lh_config* cfg, const lh_sequence* seq, const lh_point* probes,
                                    size_t n_probes, char** out);
LH_API lh_status lh_report_mcg(const lh_config* cfg, lh_matrix g, lh_point x, lh_point y, char** out);
LH_API lh_status lh_report_graph_demo(const lh_config* cfg, const lh_digraph* g, char** out);
/* model may be NULL; samples > 0 adds the sampled ratio bound. */
LH_API lh_status lh_report_detour(const lh_config* cfg, const lh_formal* sigma, const lh_formal* beta,
                                  const lh_model* model, size_t samples, char** out);
/* Upper bound on H(limit of seq, Psi_eta) from d(b, x_n) + Psi_eta(x_n); eta NULL uses the
 * sequence's own limit slope. */
LH_API lh_status lh_report_detour_along(const lh_config* cfg, const lh_sequence* seq,
                                        const lh_lamination* eta, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LHORO_LHORO_H */
