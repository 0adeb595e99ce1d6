#ifndef ZCHELP_H
#define ZCHELP_H

/* C interface to the torsion-unit verification toolkit for SL(2,q).
 *
 * Every function returns a zchelp_status.  Rendered output is handed back
 * through a char** that the caller releases with zchelp_string_free.  On
 * any failure the returned string is untouched and zchelp_last_error gives
 * a thread-local description of the problem.
 *
 * Several operations also produce a verdict through an int* out parameter:
 * 0 when the computation is complete and only trivial results remain, 3
 * otherwise.  The verdict mirrors the process exit codes of the bundled
 * command-line tool.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zchelp_status {
    ZCHELP_OK = 0,
    ZCHELP_USAGE = 1,      /* malformed arguments */
    ZCHELP_SCOPE = 2,      /* valid input outside the supported range */
    ZCHELP_NONTRIVIAL = 3, /* reserved for verdicts; never returned directly */
    ZCHELP_INTERNAL = 4    /* unexpected failure */
} zchelp_status;

/* Description of the most recent failure on this thread; empty string when
 * the last call succeeded.  The pointer stays valid until the next call. */
const char* zchelp_last_error(void);

void zchelp_string_free(char* s);

/* Formats accepted everywhere: "json", "csv", "text". */

/* Basis of the ring of integers of the maximal real subfield of the n-th
 * cyclotomic field. */
zchelp_status zchelp_render_basis(int64_t n, const char* format, char** out);

/* Expansion of zeta^i + zeta^-i over that basis. */
zchelp_status zchelp_render_expand(int64_t n, int64_t i, const char* format,
                                   char** out);

/* Conjugacy classes of SL(2,q). */
zchelp_status zchelp_render_classes(int64_t q, const char* format, char** out);

/* Constraint solve for partial augmentations of a unit of order n in the
 * integral group ring of SL(2,q). */
typedef struct zchelp_solve_opts {
    int64_t q;
    int64_t n;
    int64_t max_char;       /* largest character degree; 0 = default family */
    int normalize;          /* nonzero: pin the degree-1 eigenvalues to +-1 */
    int64_t node_cap;       /* search node budget; 0 = built-in default */
    const char* power_json; /* NULL or empty: powers follow the generator.
                             * Otherwise a JSON object mapping each divisor
                             * d > 1 of n to {"class": value, ...}. */
} zchelp_solve_opts;

typedef struct zchelp_report zchelp_report; /* opaque */

zchelp_status zchelp_solve(const zchelp_solve_opts* opts, zchelp_report** out);

/* Accessors; all require a non-NULL report from zchelp_solve. */
int zchelp_report_complete(const zchelp_report* rep);
int zchelp_report_all_trivial(const zchelp_report* rep);
int64_t zchelp_report_survivor_count(const zchelp_report* rep);
int zchelp_report_exit_code(const zchelp_report* rep);
zchelp_status zchelp_report_render(const zchelp_report* rep, const char* format,
                                   char** out);
void zchelp_report_free(zchelp_report* rep);

/* Solves every order represented in SL(2,q) and coprime to its
 * characteristic. */
zchelp_status zchelp_render_scan(int64_t q, int normalize, int64_t node_cap,
                                 const char* format, char** out, int* verdict);

/* Batch scan over several q values. */
zchelp_status zchelp_render_verify(const int64_t* qs, int64_t count,
                                   int normalize, int64_t node_cap,
                                   const char* format, char** out,
                                   int* verdict);

/* The 2-power order instance for tower height r: picks the smallest odd
 * prime power q whose group has an element of order 2^r and solves it. */
zchelp_status zchelp_render_prop41(int64_t r, int64_t node_cap,
                                   const char* format, char** out,
                                   int* verdict);

/* Coefficient-gap exclusion of a minimal disagreement of degree d at order
 * n.  Verdict 0 when every admissible profile is excluded. */
zchelp_status zchelp_render_case(int64_t n, int64_t d, const char* format,
                                 char** out, int* verdict);

/* Degree-2 exclusion over every open order <= limit, through both the
 * exact expansion route and the compact formula route.  Verdict 0 only
 * when the routes agree and exclude everywhere. */
zchelp_status zchelp_render_dual_scan(int64_t limit, const char* format,
                                      char** out, int* verdict);

/* Closed-form identity checks behind the 2-power order argument. */
zchelp_status zchelp_render_identities(int64_t r, int64_t trials,
                                       uint64_t seed, const char* format,
                                       char** out, int* verdict);

#ifdef __cplusplus
}
#endif

#endif /* ZCHELP_H */
