/* connmod: exact jets of linear connections, normal tensors and their invariants. */
#ifndef CONNMOD_CONNMOD_H
#define CONNMOD_CONNMOD_H

#include <stdint.h>

#if defined(CONNMOD_BUILDING)
#define CONNMOD_API __attribute__((visibility("default")))
#else
#define CONNMOD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum connmod_status {
  CONNMOD_OK = 0,
  CONNMOD_E_INVALID_ARGUMENT = 1,
  CONNMOD_E_DIMENSION_MISMATCH = 2,
  CONNMOD_E_ORDER_MISMATCH = 3,
  CONNMOD_E_SINGULAR_LINEAR_PART = 4,
  CONNMOD_E_SYMMETRY_VIOLATION = 5,
  CONNMOD_E_INSUFFICIENT_ORDER = 6,
  CONNMOD_E_UNBALANCED_VARIANCE = 7,
  CONNMOD_E_RESOURCE_CAP = 8,
  CONNMOD_E_INTERNAL_MISMATCH = 9,
  CONNMOD_E_PARSE = 10,
  CONNMOD_E_NULL_POINTER = 11,
  CONNMOD_E_UNKNOWN = 99
} connmod_status;

typedef struct connmod_context connmod_context;
typedef struct connmod_jet connmod_jet;
typedef struct connmod_tuple connmod_tuple;
typedef struct connmod_diffeo connmod_diffeo;

/* Contraction cap defaults to 6; CONNMOD_CAP_P overrides it when set. */
CONNMOD_API connmod_status connmod_context_create(connmod_context **out);
CONNMOD_API void connmod_context_destroy(connmod_context *ctx);
CONNMOD_API connmod_status connmod_context_set_cap(connmod_context *ctx, int cap);
CONNMOD_API int connmod_context_cap(const connmod_context *ctx);
/* Message of the last failed call on ctx; valid until the next call. */
CONNMOD_API const char *connmod_last_error(const connmod_context *ctx);
CONNMOD_API const char *connmod_status_name(connmod_status s);

/* Every char* returned through an out parameter is released with this. */
CONNMOD_API void connmod_string_free(char *s);

CONNMOD_API connmod_status connmod_jet_from_json(connmod_context *ctx, const char *json, connmod_jet **out);
CONNMOD_API connmod_status connmod_jet_to_json(connmod_context *ctx, const connmod_jet *jet, char **out);
CONNMOD_API void connmod_jet_destroy(connmod_jet *jet);

CONNMOD_API connmod_status connmod_tuple_from_json(connmod_context *ctx, const char *json, connmod_tuple **out);
CONNMOD_API connmod_status connmod_tuple_to_json(connmod_context *ctx, const connmod_tuple *t, char **out);
CONNMOD_API void connmod_tuple_destroy(connmod_tuple *t);

CONNMOD_API connmod_status connmod_diffeo_from_json(connmod_context *ctx, const char *json, connmod_diffeo **out);
CONNMOD_API connmod_status connmod_diffeo_to_json(connmod_context *ctx, const connmod_diffeo *d, char **out);
CONNMOD_API void connmod_diffeo_destroy(connmod_diffeo *d);

/* Christoffel jet of the same connection in the chart y = tau(x). */
CONNMOD_API connmod_status connmod_transform(connmod_context *ctx, const connmod_diffeo *tau, const connmod_jet *jet,
                                             connmod_jet **out);
/* Normal tensors of a jet. */
CONNMOD_API connmod_status connmod_reduce(connmod_context *ctx, const connmod_jet *jet, connmod_tuple **out);
/* Jet of order r whose normal tensors are t, polynomial in normal coordinates. */
CONNMOD_API connmod_status connmod_section(connmod_context *ctx, const connmod_tuple *t, connmod_jet **out);
/* *equivalent is set to 1 and *witness (if non-null) to a verified tau with
   identity linear part mapping a to b, or *equivalent = 0 and *witness = NULL. */
CONNMOD_API connmod_status connmod_equivalence(connmod_context *ctx, const connmod_jet *a, const connmod_jet *b,
                                               int *equivalent, connmod_diffeo **witness);

/* Reports, each one JSON document. */
CONNMOD_API connmod_status connmod_dims_json(connmod_context *ctx, int n, int m, int symmetric, char **out);
CONNMOD_API connmod_status connmod_invariants_json(connmod_context *ctx, int n, int r, int max_total, char **out);
CONNMOD_API connmod_status connmod_natural_json(connmod_context *ctx, int n, int r, int p, int q, int symmetric,
                                                const char *target, char **out);
CONNMOD_API connmod_status connmod_isotropy_json(connmod_context *ctx, int n, int r, int symmetric, int samples,
                                                 uint64_t seed, char **out);
/* pair_json: {"T2": tensor, "w2": tensor}, both covariant 2-tensors with n = 2. */
CONNMOD_API connmod_status connmod_pair_isotropy_json(connmod_context *ctx, const char *pair_json, char **out);
CONNMOD_API connmod_status connmod_moduli_json(connmod_context *ctx, int n, int r, int symmetric, int samples,
                                               uint64_t seed, char **out);
CONNMOD_API connmod_status connmod_poincare_json(connmod_context *ctx, int n, int r_max, int symmetric, int samples,
                                                 uint64_t seed, char **out);
CONNMOD_API connmod_status connmod_check_dim2_json(connmod_context *ctx, int samples, uint64_t seed, char **out,
                                                   int *passed);
/* Runs criteria 1..12; *passed is 1 only when all pass. */
CONNMOD_API connmod_status connmod_selftest_json(connmod_context *ctx, char **out, int *passed);

#ifdef __cplusplus
}
#endif

#endif
