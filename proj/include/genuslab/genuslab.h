/* genuslab.h — C interface to the genuslab shared library.
 *
 * genuslab computes class groups of the discriminants -4N (N squarefree,
 * -N != 1 mod 4), their genus characters, the representation-count
 * decomposition r(n) = (w/h) sum_chi b_chi(n), the exact L-series
 * coefficient identities behind it, and the desk-scale asymptotics of
 * sum r(n)^2.
 *
 * All entry points return glab_status. Structured results come back
 * either through opaque handles with typed getters, or as deterministic
 * JSON documents (fixed key order, floats at 12 significant digits).
 * Strings returned by the library stay owned by the handle that produced
 * them. On failure, glab_last_error() describes the problem for the
 * current thread.
 */
#ifndef GENUSLAB_GENUSLAB_H
#define GENUSLAB_GENUSLAB_H

#if defined(_WIN32)
#define GLAB_API __declspec(dllexport)
#else
#define GLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum glab_status {
  GLAB_OK = 0,
  GLAB_ERR_SCOPE = 1,    /* N not squarefree, or -N = 1 mod 4 (nonmaximal order) */
  GLAB_ERR_USAGE = 2,    /* invalid argument */
  GLAB_ERR_IO = 3,       /* cache file unreadable, unwritable, or corrupt */
  GLAB_ERR_INTERNAL = 4  /* violated internal invariant; please report */
} glab_status;

GLAB_API const char* glab_version(void);
GLAB_API const char* glab_status_str(glab_status s);
GLAB_API const char* glab_last_error(void);

/* ---- scalar helpers --------------------------------------------------- */

/* Kronecker symbol (d/n). */
GLAB_API glab_status glab_kronecker(long long d, long long n, int* out);

/* (3/N) prod_{p | 2N} 2p/(p+1). */
GLAB_API glab_status glab_main_term_constant(long long N, double* out);

/* ---- class groups ------------------------------------------------------ */

typedef struct glab_class_group glab_class_group;

GLAB_API glab_status glab_class_group_new(long long N, glab_class_group** out);
GLAB_API void glab_class_group_free(glab_class_group* g);

GLAB_API long long glab_class_group_discriminant(const glab_class_group* g);
GLAB_API long long glab_class_group_h(const glab_class_group* g);
GLAB_API int glab_class_group_k(const glab_class_group* g);
GLAB_API long long glab_class_group_genus_count(const glab_class_group* g);
GLAB_API int glab_class_group_is_solvable(const glab_class_group* g);
GLAB_API int glab_class_group_form_count(const glab_class_group* g);
/* Reduced representative #index (0 = principal form). */
GLAB_API glab_status glab_class_group_form(const glab_class_group* g, int index,
                                           long long* a, long long* b, long long* c);

/* ---- reports ------------------------------------------------------------ */

typedef struct glab_report glab_report;

typedef struct glab_report_options {
  long long limit;       /* <= 0: per-command default */
  int grid_density;      /* <= 0: default 4 points per decade */
  const char* cache_dir; /* NULL or empty: no coefficient cache */
  int timings;           /* nonzero: include wall-clock timings in the JSON */
} glab_report_options;

GLAB_API glab_status glab_report_classgroup(long long N, glab_report** out);
GLAB_API glab_status glab_report_characters(long long N, glab_report** out);
GLAB_API glab_status glab_report_coeffs(long long N, const glab_report_options* opt,
                                        glab_report** out);
GLAB_API glab_status glab_report_verify(long long N, const glab_report_options* opt,
                                        glab_report** out);
GLAB_API glab_status glab_report_asymptotic(long long N, const glab_report_options* opt,
                                            glab_report** out);
GLAB_API glab_status glab_report_scan(long long nmax, glab_report** out);
GLAB_API glab_status glab_report_constants(long long N, glab_report** out);

/* JSON text, owned by the report handle. */
GLAB_API const char* glab_report_json(const glab_report* r);
/* 1 when every verdict in the report passed, else 0. */
GLAB_API int glab_report_passed(const glab_report* r);
GLAB_API void glab_report_free(glab_report* r);

#ifdef __cplusplus
}
#endif

#endif /* GENUSLAB_GENUSLAB_H */
