/* C interface to the gl2lab library.
 *
 * All calls go through an opaque context. Functions return one of the
 * GL2LAB_* codes; string results are heap-allocated JSON the caller must
 * release with gl2lab_string_free. On GL2LAB_USAGE the context carries a
 * diagnostic retrievable via gl2lab_last_error.
 */
#ifndef GL2LAB_H
#define GL2LAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define GL2LAB_OK 0        /* ran; every asserted check passed          */
#define GL2LAB_VIOLATION 1 /* ran; at least one check or scan violated  */
#define GL2LAB_USAGE 2     /* bad arguments, budget exceeded, I/O error */

typedef struct gl2lab_ctx gl2lab_ctx;

gl2lab_ctx* gl2lab_ctx_new(void);
void gl2lab_ctx_free(gl2lab_ctx* ctx);

/* Message for the most recent failing call on this context ("" if none).
 * Owned by the context; valid until the next call. */
const char* gl2lab_last_error(gl2lab_ctx* ctx);

/* Configuration. Applies to subsequent operations on the context. */
int gl2lab_set_cache_dir(gl2lab_ctx* ctx, const char* dir);
int gl2lab_set_workers(gl2lab_ctx* ctx, int workers);
int gl2lab_set_timing(gl2lab_ctx* ctx, int enabled);
/* Pass 0 to keep a limit at its default. */
int gl2lab_set_budget(gl2lab_ctx* ctx, long long max_lattice_ambient,
                      int max_cyclic_p, int max_abelian_p);

/* Classify the subgroup of GL2(p) generated by `ngens` matrices given as
 * "a,b,c,d" strings. *json_out receives the classification report. */
int gl2lab_classify(gl2lab_ctx* ctx, int p, const char* const* gens,
                    size_t ngens, char** json_out);

/* Run one verifier. target is "lemma33", "lemma34", "prop32" or "prop31";
 * part selects a sub-case where the target has one (NULL or "" = all).
 * Returns GL2LAB_VIOLATION when the verifier records a failure. */
int gl2lab_verify(gl2lab_ctx* ctx, const char* target, int modulus,
                  const char* part, char** json_out);

/* Inertia scan. mode is "cyclotomic" or "abelian"; ramified is a flag.
 * Returns GL2LAB_VIOLATION when the report lists violations. */
int gl2lab_scan(gl2lab_ctx* ctx, const char* mode, int p, int d,
                int ramified, char** json_out);

/* Cache maintenance in the configured cache directory. action is "warm"
 * (requires p and family "cyclic"/"abelian"), "clear" or "stat". */
int gl2lab_cache_op(gl2lab_ctx* ctx, const char* action, int p,
                    const char* family, char** json_out);

void gl2lab_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GL2LAB_H */
