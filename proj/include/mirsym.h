/* mirsym: exact computations in enumerative mirror symmetry.
 *
 * C interface to the shared library. Every computation returns an opaque
 * msym_result holding a JSON document and a plain-text rendering; free it
 * with msym_result_free. Functions return MSYM_OK on success; on failure a
 * diagnostic is available from msym_last_error() (thread-local).
 */
#ifndef MIRSYM_H
#define MIRSYM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum msym_status {
    MSYM_OK = 0,
    MSYM_ERROR_INVALID_ARGUMENT = 1,
    MSYM_ERROR_COMPUTATION = 2,
    MSYM_ERROR_PARSE = 3,
    MSYM_ERROR_INTERNAL = 4
} msym_status;

typedef struct msym_result msym_result;

const char* msym_version(void);

/* Thread-local message describing the most recent failure in this thread. */
const char* msym_last_error(void);

const char* msym_result_json(const msym_result* r);
const char* msym_result_text(const msym_result* r);
void msym_result_free(msym_result* r);

/* Degree-d rational curve counts on the quintic threefold from the
 * Picard-Fuchs pipeline: mirror map, coupling extraction, multiple-cover
 * inversion. order < 0 means dmax + 2 guard terms; toy_order > 0 appends the
 * multiple-cover toy-model verification at that order. */
msym_status msym_quintic(int dmax, int order, int toy_order, msym_result** out);

/* Degree-d rational plane curve counts through 3d-1 generic points.
 * residual_degree > 0 additionally verifies the associativity residual
 * through that q1-degree (dump_residual includes nonzero terms in the JSON). */
msym_status msym_plane_curves(int dmax, int residual_degree, int dump_residual,
                              msym_result** out);

/* Genus-g simple-branched-cover counts of the torus; optional transitive
 * enumeration cross-check and quasimodular fit. */
msym_status msym_hurwitz(int genus, int dmax, int bruteforce, int fit, int threads,
                         msym_result** out);

/* q-expansion of the Eisenstein series E_k, k in {2, 4, 6}. */
msym_status msym_eisenstein(int k, int order, msym_result** out);

/* Verifies the Stasheff identities and the coderivation square of the
 * structure encoded in structure_json (schema in the README), through the
 * given arity. all_pass (optional) reports the verdict. */
msym_status msym_ainfty_check(const char* structure_json, int arity, int* all_pass,
                              msym_result** out);

/* Intersection bases, Maslov gradings and composition tensor of flat
 * geodesics on the square torus. slopes: "p/q,p/q,..." (3 or 4 entries);
 * offsets: comma-separated rationals. With 4 slopes and with_associativity
 * nonzero, also reports the associativity residual. */
msym_status msym_fukaya_torus(const char* slopes, const char* offsets, double area_scale,
                              double tol, int with_associativity, msym_result** out);

/* Oracle cross-checks for one module ("quintic", "plane-curves", "hurwitz",
 * "eisenstein", "ainfty", "fukaya-torus", or "all"). all_pass (optional)
 * reports the verdict. */
msym_status msym_selftest(const char* module, int threads, int* all_pass, msym_result** out);

#ifdef __cplusplus
}
#endif

#endif /* MIRSYM_H */
