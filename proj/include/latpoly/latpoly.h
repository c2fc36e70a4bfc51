#ifndef LATPOLY_LATPOLY_H
#define LATPOLY_LATPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LATPOLY_BUILDING)
#define LP_API __declspec(dllexport)
#else
#define LP_API __declspec(dllimport)
#endif
#else
#define LP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lp_status {
  LP_OK = 0,
  LP_ERR_INVALID_ARGUMENT = 1,
  LP_ERR_OVERFLOW = 2,
  LP_ERR_PARSE = 3,
  LP_ERR_INFEASIBLE = 4,
  LP_ERR_OUT_OF_SCOPE = 5,
  LP_ERR_BUDGET = 6,
  LP_ERR_INTERNAL = 7
} lp_status;

/* Opaque lattice polytope. */
typedef struct lp_polytope lp_polytope;

/* Strings returned through char** are owned by the caller and released with lp_string_free. */
LP_API void lp_string_free(char* s);
LP_API const char* lp_status_string(lp_status s);
/* Message of the last failing call on this thread, "" if none. */
LP_API const char* lp_last_error(void);
LP_API const char* lp_version(void);

/* coords holds npoints rows of dim integers. */
LP_API lp_status lp_polytope_create(size_t dim, size_t npoints, const int64_t* coords, lp_polytope** out);
/* {"name": optional string, "dim": integer, "vertices": [[...], ...]} */
LP_API lp_status lp_polytope_from_json(const char* text, lp_polytope** out);
LP_API lp_status lp_polytope_to_json(const lp_polytope* p, char** out);
LP_API lp_status lp_polytope_dim(const lp_polytope* p, size_t* out);
LP_API lp_status lp_polytope_num_vertices(const lp_polytope* p, size_t* out);
/* Writes the vertex coordinates row by row; capacity counts integers. */
LP_API lp_status lp_polytope_vertices(const lp_polytope* p, int64_t* out, size_t capacity);
LP_API void lp_polytope_free(lp_polytope* p);

/* δ-vector with respect to the affine lattice of p. *len receives the entry count even when capacity is short,
   in which case LP_ERR_INVALID_ARGUMENT is returned. */
LP_API lp_status lp_delta_vector(const lp_polytope* p, int64_t* out, size_t capacity, size_t* len);
LP_API lp_status lp_invariants_json(const lp_polytope* p, char** out);

/* Catalog polytope. Simplices take their exponents, A4_1..A4_3 and B4 take k, Table-2 ids take none.
   Violated parameter conditions give LP_ERR_INFEASIBLE. */
LP_API lp_status lp_generate(const char* family, const int64_t* params, size_t nparams, size_t pyramids,
                             lp_polytope** out);
/* Feasibility of 1 + t^{e_1} + ... + t^{e_n} at dimension d (volume n+1). */
LP_API lp_status lp_feasible(const int64_t* exponents, size_t n, int64_t d, int as_printed, int* out);

/* Classification with its witness chain; volume > 4 gives LP_ERR_OUT_OF_SCOPE and still fills *out. */
LP_API lp_status lp_classify_json(const lp_polytope* p, size_t budget, char** out);
/* {"status": "equivalent"|"not-equivalent"|"indeterminate", "witness"?, "reason", "nodes"} */
LP_API lp_status lp_equivalent_json(const lp_polytope* a, const lp_polytope* b, size_t budget, char** out);
/* Applies a witness chain or a single map {"matrix", "translation"} to p. */
LP_API lp_status lp_apply_json(const char* witness_json, const lp_polytope* p, lp_polytope** out);

/* Runs a verification suite. options_json may be NULL or {"dmax","kmax","seed","budget","workers","samples"}.
   The report carries a "text" member with the rendered summary. */
LP_API lp_status lp_verify_json(const char* suite, const char* options_json, int verbose, char** out);
/* Non-pyramid simplex classes of dimension d with volume 2..vmax, with the realized δ-exponents. */
LP_API lp_status lp_enumerate_json(size_t d, int64_t vmax, size_t workers, char** out);

#ifdef __cplusplus
}
#endif

#endif
