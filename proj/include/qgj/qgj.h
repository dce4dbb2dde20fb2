/*
 * C API of the qgjelim shared library.
 *
 * All functions returning qgj_status set a thread-local error message
 * retrievable with qgj_last_error() on failure. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * qgj_string_free().
 */
#ifndef QGJ_QGJ_H
#define QGJ_QGJ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QGJ_API __declspec(dllexport)
#else
#define QGJ_API __attribute__((visibility("default")))
#endif

typedef enum qgj_status {
    QGJ_OK = 0,
    QGJ_ERR_INVALID_ARG = 1,
    QGJ_ERR_PARSE = 2,
    QGJ_ERR_IO = 3,
    QGJ_ERR_DOMAIN = 4,
    QGJ_ERR_INTERNAL = 5
} qgj_status;

QGJ_API const char* qgj_status_name(qgj_status status);

/* Message describing the most recent failure on this thread; never NULL. */
QGJ_API const char* qgj_last_error(void);

QGJ_API void qgj_string_free(char* s);

/* ---- augmented linear systems (opaque) ---- */

typedef struct qgj_system qgj_system;

QGJ_API qgj_status qgj_system_parse(const char* text, qgj_system** out);
QGJ_API qgj_status qgj_system_load(const char* path, qgj_system** out);
QGJ_API void qgj_system_free(qgj_system* system);
QGJ_API int qgj_system_rows(const qgj_system* system);
QGJ_API int qgj_system_cols(const qgj_system* system); /* coefficient columns */

/* ---- subcommand report runners; format is "text", "csv" or "json" ---- */

QGJ_API qgj_status qgj_run_rref(const qgj_system* system, const char* pivot,
                                unsigned long long seed, int show_ledger,
                                const char* format, char** out);

/* *solvable is set to 0 when the system is inconsistent, else 1. */
QGJ_API qgj_status qgj_run_solve(const qgj_system* system, const char* format,
                                 char** out, int* solvable);

/* fixed_iterations < 0 means "use the planner's schedule". */
QGJ_API qgj_status qgj_run_grover(int n_qubits, const unsigned long long* marked,
                                  size_t n_marked, unsigned long long seed,
                                  long long fixed_iterations, const char* format,
                                  char** out);

QGJ_API qgj_status qgj_run_deutsch(int f0, int f1, const char* format, char** out);

QGJ_API qgj_status qgj_run_add(int n_qubits, unsigned long long a, unsigned long long b,
                               int trace, const char* format, char** out);

QGJ_API qgj_status qgj_run_cost(int max_n, int simulate, unsigned long long seed,
                                const char* format, char** out);

/* ---- direct numeric entry points ---- */

QGJ_API double qgj_paper_cost_total(int n_dim);
QGJ_API double qgj_closed_form_cost(int n_dim);
QGJ_API unsigned long long qgj_sum_of_squares(unsigned long long n);

QGJ_API qgj_status qgj_quantum_add(int n_qubits, unsigned long long a,
                                   unsigned long long b, unsigned long long* out);

/* *balanced is set to 1 for a balanced table, 0 for constant. */
QGJ_API qgj_status qgj_deutsch_classify(int f0, int f1, int* balanced);

/* *found is set to -1 when nothing is marked. */
QGJ_API qgj_status qgj_grover_search(int n_qubits, const unsigned long long* marked,
                                     size_t n_marked, unsigned long long seed,
                                     long long* found, unsigned long long* oracle_queries,
                                     unsigned long long* iterations);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif
