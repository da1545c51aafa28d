/* latfact — lattice interval factorization library, C interface.
 *
 * All functions return lf_status; results come back through out-parameters.
 * Handles are opaque and must be released with the matching _free function.
 * Strings returned through char** are heap-allocated; release them with
 * lf_string_free. On error, lf_last_error() describes the failure for the
 * calling thread.
 */
#ifndef LATFACT_H
#define LATFACT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lf_status {
  LF_OK = 0,
  LF_ERR_INPUT = 1,    /* bad identifiers, malformed files, bad intervals */
  LF_ERR_SEMANTIC = 2, /* preconditions, structural failures */
  LF_ERR_BUDGET = 3,   /* oracle refusals */
  LF_ERR_INTERNAL = 4
} lf_status;

typedef struct lf_context lf_context;
typedef struct lf_lattice lf_lattice;
typedef struct lf_factor lf_factor;

const char* lf_last_error(void);
void lf_string_free(char* s);

/* ---- formal contexts ---- */

lf_status lf_context_parse_cxt(const char* text, size_t len, lf_context** out);
lf_status lf_context_read_file(const char* path, lf_context** out);
lf_status lf_context_to_cxt(const lf_context* ctx, char** out);
void lf_context_free(lf_context* ctx);

size_t lf_context_objects(const lf_context* ctx);
size_t lf_context_attributes(const lf_context* ctx);

/* Clarify / reduce; report lists merged or removed identifiers as text. */
lf_status lf_context_clarify(const lf_context* ctx, lf_context** out, char** report);
lf_status lf_context_reduce(const lf_context* ctx, lf_context** out, char** report);
lf_status lf_context_is_reduced(const lf_context* ctx, int* out);

/* ---- concept lattices ---- */

lf_status lf_lattice_build(const lf_context* ctx, lf_lattice** out);
void lf_lattice_free(lf_lattice* lat);
size_t lf_lattice_size(const lf_lattice* lat);

/* "<concepts> concepts, <j> join-irreducible, <m> meet-irreducible" plus
 * counts as JSON. */
lf_status lf_lattice_stats_json(const lf_lattice* lat, char** out);
lf_status lf_lattice_to_json(const lf_lattice* lat, char** out);
lf_status lf_lattice_to_dot(const lf_lattice* lat, char** out);
lf_status lf_lattice_generic_context(const lf_lattice* lat, lf_context** out);

/* Builds the lattice of a lattice-JSON document (as written by
 * lf_lattice_to_json); fails with LF_ERR_SEMANTIC if it is not a lattice. */
lf_status lf_lattice_from_json(const char* text, size_t len, lf_lattice** out);

/* Resolves "bottom=<ep>:top=<ep>" to concept indices. */
lf_status lf_lattice_resolve_interval(const lf_lattice* lat, const char* spec, int* bottom,
                                      int* top);

/* ---- factorizations ---- */

/* method: "congruence", "tolerance", "interval" (any number of intervals),
 * or "context" (enrichment; single interval). A JSON report is always
 * produced; with require_lattice set, a non-lattice factor fails with
 * LF_ERR_SEMANTIC after filling the report. */
lf_status lf_factor_run(const lf_lattice* lat, const char* method, const int* bottoms,
                        const int* tops, size_t interval_count, int require_lattice,
                        lf_factor** out);
void lf_factor_free(lf_factor* f);

lf_status lf_factor_report_json(const lf_factor* f, char** out);
lf_status lf_factor_to_dot(const lf_factor* f, char** out);
/* Factor classes count; for tolerance/congruence/context this is the size
 * of the factor lattice. */
size_t lf_factor_size(const lf_factor* f);
/* 1 if the factor is a lattice, 0 otherwise. */
int lf_factor_is_lattice(const lf_factor* f);
/* For tolerance: the grown incidence as .cxt; for context: the enriched
 * context. LF_ERR_SEMANTIC for other methods. */
lf_status lf_factor_context_cxt(const lf_factor* f, char** out);

/* Pure/nested classification of one interval: fills *pure with 1 or 0. */
lf_status lf_classify_interval(const lf_lattice* lat, int bottom, int top, int* pure);

/* ---- enrichment ---- */

/* Enriches the context by the given intervals (simultaneous, or iterative
 * in the given order). Fills the enriched context and a delta listing. */
lf_status lf_enrich(const lf_lattice* lat, const int* bottoms, const int* tops,
                    size_t interval_count, int iterative, lf_context** out, char** delta);

/* ---- verification ---- */

/* Runs the oracle cross-checks (concepts, factor order, block relation,
 * pure/nested agreement) on the given context. budget <= 0 keeps defaults.
 * Fails with LF_ERR_BUDGET if the instance is too large. */
lf_status lf_verify(const lf_context* ctx, int max_objects, int max_attributes,
                    int max_elements, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LATFACT_H */
