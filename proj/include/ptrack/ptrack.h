/* C interface to the two-phase front-tracking library. All handles are
 * opaque; every fallible call returns a ptrack_status and leaves a message
 * in ptrack_last_error() on failure. Strings returned by the library stay
 * valid until the owning handle is freed. */
#ifndef PTRACK_H
#define PTRACK_H

#include <stddef.h>
#include <stdint.h>

#if defined(PTRACK_BUILDING_LIBRARY)
#define PTRACK_API __attribute__((visibility("default")))
#else
#define PTRACK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ptrack_status {
  PTRACK_OK = 0,
  PTRACK_NEGATIVE = 1,       /* command ran; result is domain-negative */
  PTRACK_ERR_USAGE = 2,      /* bad argument */
  PTRACK_ERR_PARSE = 3,      /* configuration could not be parsed */
  PTRACK_ERR_DOMAIN = 4,     /* numeric argument outside its domain */
  PTRACK_ERR_INTERNAL = 5
} ptrack_status;

typedef struct ptrack_config ptrack_config;
typedef struct ptrack_report ptrack_report;

PTRACK_API const char* ptrack_version(void);

/* Message of the last failure on this thread ("" if none). */
PTRACK_API const char* ptrack_last_error(void);

/* Process exit class of a status: 0 pass, 1 negative, 2 usage/parse, 3 internal. */
PTRACK_API int ptrack_exit_code(ptrack_status status);

PTRACK_API ptrack_status ptrack_config_load(const char* path, ptrack_config** out);
PTRACK_API ptrack_status ptrack_config_parse(const char* text, ptrack_config** out);
PTRACK_API void ptrack_config_free(ptrack_config* cfg);
/* Replaces the seed of random data and the provenance seed. */
PTRACK_API ptrack_status ptrack_config_set_seed(ptrack_config* cfg, uint64_t seed);
/* Line of the last parse error (0 if unknown). */
PTRACK_API int ptrack_last_error_line(void);

/* out_dir may be NULL: the PTRACK_OUT_DIR environment variable, then the
 * configured directory, then "ptrack_out" are used. On PTRACK_OK or
 * PTRACK_NEGATIVE *out holds a report. */
PTRACK_API ptrack_status ptrack_check(const ptrack_config* cfg, const char* out_dir,
                                      ptrack_report** out);
PTRACK_API ptrack_status ptrack_run(const ptrack_config* cfg, const char* out_dir, int force,
                                    ptrack_report** out);
PTRACK_API ptrack_status ptrack_converge(const ptrack_config* cfg, const int* nus, size_t n_nus,
                                         const char* out_dir, int force, ptrack_report** out);
/* suite: a suite name or "all"; grid 0 selects the default. out_dir NULL
 * falls back to PTRACK_OUT_DIR only; if neither is set nothing is written. */
PTRACK_API ptrack_status ptrack_verify(const char* suite, int grid, uint64_t seed,
                                       const char* out_dir, ptrack_report** out);

PTRACK_API ptrack_status ptrack_report_outcome(const ptrack_report* r);
PTRACK_API const char* ptrack_report_text(const ptrack_report* r);
PTRACK_API const char* ptrack_report_json(const ptrack_report* r);
PTRACK_API size_t ptrack_report_artifact_count(const ptrack_report* r);
PTRACK_API const char* ptrack_report_artifact(const ptrack_report* r, size_t k);
PTRACK_API void ptrack_report_free(ptrack_report* r);

/* Numerical helpers. */
PTRACK_API ptrack_status ptrack_k_threshold(double r, double* out);
PTRACK_API ptrack_status ptrack_c_damp(double z, double* out);
/* Lax solution: out[0] = eps1, out[1] = eps3, out[2] = largest residual. */
PTRACK_API ptrack_status ptrack_solve_lax(double v_l, double u_l, double v_r, double u_r,
                                          double a_l, double a_r, double out[3]);

#ifdef __cplusplus
}
#endif

#endif /* PTRACK_H */
