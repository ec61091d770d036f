/*
 * C interface to libpbnn: permutation binary neural network simulation,
 * Dmap cycle decomposition, standard permutation IDs and GBPO sweeps.
 *
 * All objects are opaque handles created by *_create / *_run / *_parse and
 * released by the matching *_destroy. Functions return a pbnn_status; on
 * failure pbnn_last_error() describes the problem (per thread).
 *
 * States are passed as bit words: bit i-1 holds x_i, set means +1.
 * Permutations are passed as digit strings ("1325476"), comma separated
 * for dimensions above 9.
 */
#ifndef PBNN_H
#define PBNN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PBNN_BUILDING_LIBRARY)
#    define PBNN_API __declspec(dllexport)
#  else
#    define PBNN_API __declspec(dllimport)
#  endif
#else
#  define PBNN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pbnn_status {
  PBNN_OK = 0,
  PBNN_ERROR_INVALID_ARGUMENT = 1, /* bad CN, permutation, state literal, null pointer */
  PBNN_ERROR_DIMENSION = 2,        /* dimension mismatch */
  PBNN_ERROR_NOT_PRIME = 3,
  PBNN_ERROR_BUDGET = 4,           /* enumeration or sweep budget exceeded */
  PBNN_ERROR_PARSE = 5,
  PBNN_ERROR_OVERFLOW = 6,
  PBNN_ERROR_INTERNAL = 7
} pbnn_status;

typedef struct pbnn_string pbnn_string;
typedef struct pbnn_config pbnn_config;
typedef struct pbnn_analysis pbnn_analysis;
typedef struct pbnn_id_list pbnn_id_list;
typedef struct pbnn_results pbnn_results;

PBNN_API const char* pbnn_version(void);
PBNN_API const char* pbnn_status_string(pbnn_status status);
/* Message for the last failed call on this thread; "" if none. */
PBNN_API const char* pbnn_last_error(void);

/* ---- strings returned by the library ---------------------------------- */

PBNN_API const char* pbnn_string_data(const pbnn_string* s);
PBNN_API size_t pbnn_string_size(const pbnn_string* s);
PBNN_API void pbnn_string_destroy(pbnn_string* s);

/* ---- network configuration -------------------------------------------- */

/* perm may be NULL for the identity permutation. */
PBNN_API pbnn_status pbnn_config_create(unsigned n, unsigned cn, const char* perm,
                                        pbnn_config** out);
PBNN_API void pbnn_config_destroy(pbnn_config* cfg);
PBNN_API unsigned pbnn_config_dimension(const pbnn_config* cfg);
PBNN_API pbnn_status pbnn_config_describe(const pbnn_config* cfg, pbnn_string** out);

PBNN_API pbnn_status pbnn_step(const pbnn_config* cfg, uint64_t state, uint64_t* out);
/* Writes steps+1 states (x0 first); capacity must be at least steps+1. */
PBNN_API pbnn_status pbnn_trajectory(const pbnn_config* cfg, uint64_t x0, size_t steps,
                                     uint64_t* out, size_t capacity);

/* "+--+..." or "1001..." literal, x_1 first. */
PBNN_API pbnn_status pbnn_state_parse(unsigned n, const char* text, uint64_t* out);
PBNN_API pbnn_status pbnn_state_random(unsigned n, uint64_t seed, uint64_t* out);

typedef enum pbnn_render_style { PBNN_RENDER_ASCII = 0, PBNN_RENDER_SVG = 1 } pbnn_render_style;

/* Spatiotemporal pattern of x0 .. x^steps. ASCII uses '.' for +1 and '#' for -1. */
PBNN_API pbnn_status pbnn_render_pattern(const pbnn_config* cfg, uint64_t x0, size_t steps,
                                         pbnn_render_style style, pbnn_string** out);

/* ---- Dmap analysis ---------------------------------------------------- */

typedef enum pbnn_endpoint_behavior {
  PBNN_ENDPOINTS_FIXED = 0,
  PBNN_ENDPOINTS_SWAP = 1,
  PBNN_ENDPOINTS_OTHER = 2
} pbnn_endpoint_behavior;

typedef struct pbnn_verdict {
  int is_gbpo;
  uint32_t period;
  uint64_t epp_count;
  pbnn_endpoint_behavior endpoint_behavior;
} pbnn_verdict;

typedef struct pbnn_cycle_info {
  uint32_t period;
  uint64_t basin_size;
  uint32_t start_index; /* smallest Dmap index on the cycle (1-based) */
  int touches_endpoint;
} pbnn_cycle_info;

typedef enum pbnn_report_format {
  PBNN_REPORT_TEXT = 0,
  PBNN_REPORT_JSON = 1,
  PBNN_REPORT_DOT = 2,
  PBNN_REPORT_SVG = 3,
  PBNN_REPORT_CSV = 4
} pbnn_report_format;

/* Builds the Dmap over all 2^n states and decomposes it. */
PBNN_API pbnn_status pbnn_analysis_create(const pbnn_config* cfg, pbnn_analysis** out);
PBNN_API void pbnn_analysis_destroy(pbnn_analysis* a);
PBNN_API size_t pbnn_analysis_cycle_count(const pbnn_analysis* a);
PBNN_API pbnn_status pbnn_analysis_cycle(const pbnn_analysis* a, size_t i, pbnn_cycle_info* out);
PBNN_API pbnn_status pbnn_analysis_verdict(const pbnn_analysis* a, pbnn_verdict* out);
/* Smallest-index state on the longest cycle, as a bit word. */
PBNN_API pbnn_status pbnn_analysis_on_orbit_state(const pbnn_analysis* a, uint64_t* out);
PBNN_API pbnn_status pbnn_analysis_report(const pbnn_analysis* a, pbnn_report_format format,
                                          pbnn_string** out);

PBNN_API pbnn_status pbnn_basic_period(unsigned cn, unsigned np, uint32_t* out);

/* ---- permutation IDs -------------------------------------------------- */

PBNN_API pbnn_status pbnn_shift(const char* perm, pbnn_string** out);
PBNN_API pbnn_status pbnn_standard_id(const char* perm, pbnn_string** out);
PBNN_API pbnn_status pbnn_is_basic(const char* perm, int* out);
PBNN_API pbnn_status pbnn_count_standard_ids(unsigned np, uint64_t* out);
/* max_candidates = 0 selects the default budget (np <= 11). */
PBNN_API pbnn_status pbnn_standard_ids_create(unsigned np, uint64_t max_candidates,
                                              pbnn_id_list** out);
PBNN_API size_t pbnn_id_list_size(const pbnn_id_list* list);
PBNN_API const char* pbnn_id_list_at(const pbnn_id_list* list, size_t i);
PBNN_API void pbnn_id_list_destroy(pbnn_id_list* list);

/* ---- GBPO sweeps and result files ------------------------------------- */

typedef struct pbnn_sweep_options {
  unsigned np;
  const unsigned* cns; /* NULL selects 0,1,2,3,5,7 */
  size_t cn_count;
  unsigned jobs;            /* 0 = hardware concurrency */
  uint64_t max_candidates;  /* 0 = default */
  uint64_t max_configs;     /* 0 = unlimited */
} pbnn_sweep_options;

typedef struct pbnn_record {
  unsigned cn;
  char standard_id[192];
  uint32_t period;
  uint64_t epp_count;
} pbnn_record;

typedef enum pbnn_results_format { PBNN_RESULTS_CSV = 0, PBNN_RESULTS_JSON = 1 } pbnn_results_format;

/* On PBNN_ERROR_BUDGET from the config budget, *out still receives the
 * completed part (pbnn_results_complete() == 0). */
PBNN_API pbnn_status pbnn_sweep_run(const pbnn_sweep_options* options, pbnn_results** out);
PBNN_API pbnn_status pbnn_results_parse(const char* text, size_t size, pbnn_results** out);
PBNN_API void pbnn_results_destroy(pbnn_results* r);
PBNN_API unsigned pbnn_results_np(const pbnn_results* r);
PBNN_API int pbnn_results_complete(const pbnn_results* r);
PBNN_API size_t pbnn_results_record_count(const pbnn_results* r);
PBNN_API pbnn_status pbnn_results_record(const pbnn_results* r, size_t i, pbnn_record* out);
/* timestamp may be NULL (omitted from the metadata). */
PBNN_API pbnn_status pbnn_results_serialize(const pbnn_results* r, pbnn_results_format format,
                                            const char* timestamp, pbnn_string** out);
PBNN_API pbnn_status pbnn_results_summary(const pbnn_results* r, pbnn_string** out);
/* Compares results against a reference for the CNs listed in results.
 * *difference_count is 0 iff they agree; *diff gets a readable report. */
PBNN_API pbnn_status pbnn_results_verify(const pbnn_results* results, const pbnn_results* reference,
                                         size_t* difference_count, pbnn_string** diff);

#ifdef __cplusplus
}
#endif

#endif /* PBNN_H */
