#ifndef QSCHUBERT_H
#define QSCHUBERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QS_API __declspec(dllexport)
#else
#define QS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qs_status {
  QS_OK = 0,
  QS_INVALID_ARGUMENT = 1,
  QS_PARSE = 2,
  QS_ZERO_SPECIALIZATION = 3,
  QS_SHAPE_MISMATCH = 4,
  QS_INHOMOGENEOUS_INPUT = 5,
  QS_PRECONDITION_VIOLATED = 6,
  QS_VERIFICATION_FAILED = 7,
  QS_BUDGET_EXCEEDED = 8,
  QS_HYPOTHESIS_VIOLATED = 9,
  QS_NOT_IN_RESIDUAL_POSET = 10,
  QS_NO_RELATION_FOUND = 11,
  QS_INTERNAL = 12,
  /* The command ran and produced output, but a check in it failed. */
  QS_CHECK_FAILED = 100
} qs_status;

typedef enum qs_format { QS_FORMAT_TEXT = 0, QS_FORMAT_JSON = 1 } qs_format;

typedef struct qs_context qs_context;

QS_API const char* qs_version(void);
QS_API const char* qs_status_name(qs_status status);
/* Message of the last failing call on this thread; never NULL. */
QS_API const char* qs_last_error(void);
/* Frees strings returned through char** out parameters. */
QS_API void qs_string_free(char* s);

QS_API qs_status qs_context_new(qs_context** out);
QS_API void qs_context_free(qs_context* ctx);
QS_API qs_status qs_context_set_format(qs_context* ctx, qs_format format);
QS_API qs_status qs_context_set_seed(qs_context* ctx, uint64_t seed);
/* NULL or "" selects generic q; otherwise a nonzero rational such as "1/3". */
QS_API qs_status qs_context_set_q0(qs_context* ctx, const char* q0);
/* Words per graded component before QS_BUDGET_EXCEEDED; 0 restores the
   default. Process-wide. */
QS_API qs_status qs_set_component_budget(size_t words);

/* Every command writes a newly allocated, newline-terminated string to *out
   on QS_OK and QS_CHECK_FAILED; *out is NULL otherwise. Optional string
   arguments may be NULL. */

QS_API qs_status qs_minor(const qs_context* ctx, const char* shape, const char* minor, char** out);
QS_API qs_status qs_straighten(const qs_context* ctx, const char* shape, const char* product, const char* gamma,
                               char** out);
QS_API qs_status qs_relations(const qs_context* ctx, const char* shape, const char* const* products, size_t count,
                              char** out);
QS_API qs_status qs_muir(const qs_context* ctx, int n, const char* relation, const char* p, const char* q,
                         char** out);
QS_API qs_status qs_ladder(const qs_context* ctx, const char* gamma, const char* shape, char** out);
QS_API qs_status qs_gkdim_grass(const qs_context* ctx, int m, int n, const char* gamma, char** out);
QS_API qs_status qs_gkdim_det(const qs_context* ctx, const char* shape, const char* delta, char** out);
QS_API qs_status qs_gorenstein(const qs_context* ctx, const char* gamma, int n, char** out);
QS_API qs_status qs_hilbert(const qs_context* ctx, const char* shape, const char* gamma, int max_degree, char** out);
QS_API qs_status qs_express(const qs_context* ctx, const char* shape, const char* gamma, const char* x, char** out);
QS_API qs_status qs_detring_straighten(const qs_context* ctx, const char* shape, const char* delta,
                                       const char* product, char** out);
QS_API qs_status qs_detring_laplace(const qs_context* ctx, int t, const char* rows, const char* cols,
                                   const char* shape, char** out);
QS_API qs_status qs_detring_dehom_check(const qs_context* ctx, const char* shape, const char* delta, int max_degree,
                                        char** out);
/* suite: "all" or one of the names listed by qs_suites. max_degree < 0 uses
   the manifest defaults. */
QS_API qs_status qs_check(const qs_context* ctx, const char* suite, const char* shape, const char* gamma,
                          const char* delta, int max_degree, char** out);
/* Space-separated suite names. */
QS_API qs_status qs_suites(char** out);
QS_API qs_status qs_manifest(char** out);

#ifdef __cplusplus
}
#endif

#endif
