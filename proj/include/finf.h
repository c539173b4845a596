#ifndef FINF_H
#define FINF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FINF_API __declspec(dllexport)
#else
#define FINF_API __attribute__((visibility("default")))
#endif

typedef enum {
    FINF_OK = 0,
    FINF_ERR_ARGUMENT = 1,     /* bad parameter, unknown engine for this invariant */
    FINF_ERR_PARSE = 2,        /* braid word or diagram text */
    FINF_ERR_NOT_A_KNOT = 3,   /* closure has more than one component */
    FINF_ERR_DIAGRAM = 4,      /* unsupported or malformed tangle diagram */
    FINF_ERR_INTERNAL = 5
} finf_status;

typedef enum {
    FINF_ENGINE_TRACE = 0,
    FINF_ENGINE_STATESUM = 1,
    FINF_ENGINE_HOMOLOGICAL = 2,
    FINF_ENGINE_QDET = 3
} finf_engine;

typedef enum {
    FINF_INVARIANT_FINF = 0,
    FINF_INVARIANT_JONES = 1,
    FINF_INVARIANT_ADO = 2,
    FINF_INVARIANT_ALEXANDER = 3
} finf_invariant;

typedef struct finf_braid finf_braid;
typedef struct finf_result finf_result;
typedef struct finf_report finf_report;

/* Message of the last failing call on this thread; never NULL. */
FINF_API const char* finf_last_error(void);
FINF_API const char* finf_version(void);

/* Signed letters ("1 -2 1") or a preset name. strands <= 0 infers it. */
FINF_API finf_status finf_braid_parse(const char* text, int strands, finf_braid** out);
FINF_API void finf_braid_free(finf_braid* b);
FINF_API int finf_braid_strands(const finf_braid* b);
FINF_API int finf_braid_length(const finf_braid* b);
FINF_API int finf_braid_writhe(const finf_braid* b);
FINF_API int finf_braid_is_knot(const finf_braid* b);
/* Cycle type of the induced permutation, e.g. "(2,1)". Owned by the handle. */
FINF_API const char* finf_braid_cycles(const finf_braid* b);
/* Canonical letter string. Owned by the handle. */
FINF_API const char* finf_braid_text(const finf_braid* b);

/* param is B for finf, N for jones, r for ado and ignored for alexander.
   Engines: finf and jones take all four; ado takes trace and qdet; alexander takes trace and qdet. */
FINF_API finf_status finf_compute(const finf_braid* b, finf_invariant inv, finf_engine engine, int param,
                                  int normalize, finf_result** out);
FINF_API void finf_result_free(finf_result* r);
/* Both strings are owned by the result. */
FINF_API const char* finf_result_text(const finf_result* r);
FINF_API const char* finf_result_json(const finf_result* r);
/* 1 if the values are equal. */
FINF_API int finf_result_equal(const finf_result* a, const finf_result* b);
/* finf results only: 1 if they agree at s = q^N for N <= B and their q = 1 difference
   has (s - s^-1)-adic order > B. */
FINF_API int finf_result_congruent(const finf_result* a, const finf_result* b, int B);
/* Describes the first term where a and b differ into buf (truncated to n bytes).
   Returns 0 when they are equal. */
FINF_API int finf_result_first_difference(const finf_result* a, const finf_result* b, char* buf, size_t n);

/* Cross-verification suite: engine agreement at B, Markov moves, ADO symmetry and
   factorization for r = 2, 3, MMR at q = 1. threads <= 0 reads FINF_THREADS. */
FINF_API finf_status finf_verify_all(const finf_braid* b, int B, int threads, finf_report** out);
FINF_API void finf_report_free(finf_report* r);
FINF_API size_t finf_report_count(const finf_report* r);
FINF_API const char* finf_report_name(const finf_report* r, size_t i);
FINF_API int finf_report_passed(const finf_report* r, size_t i);
FINF_API const char* finf_report_detail(const finf_report* r, size_t i);
FINF_API const char* finf_report_json(const finf_report* r);

#ifdef __cplusplus
}
#endif

#endif
