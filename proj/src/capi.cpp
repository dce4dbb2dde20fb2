#include "qgj/qgj.h"

#include "qgj/matrix_io.hpp"
#include "qgj/qft_arith.hpp"
#include "qgj/qgje.hpp"
#include "qgj/reports.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>
#include <vector>

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) {
    g_last_error = message;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs `fn`, translating exceptions into status codes + last-error message.
template <typename Fn>
qgj_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const qgj::ParseError& e) {
        set_error(e.what());
        return QGJ_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return QGJ_ERR_INVALID_ARG;
    } catch (const std::out_of_range& e) {
        set_error(e.what());
        return QGJ_ERR_INVALID_ARG;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QGJ_ERR_INTERNAL;
    }
}

}  // namespace

struct qgj_system {
    qgj::AugmentedSystem value;
};

extern "C" {

const char* qgj_status_name(qgj_status status) {
    switch (status) {
    case QGJ_OK: return "ok";
    case QGJ_ERR_INVALID_ARG: return "invalid argument";
    case QGJ_ERR_PARSE: return "parse error";
    case QGJ_ERR_IO: return "io error";
    case QGJ_ERR_DOMAIN: return "domain error";
    case QGJ_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* qgj_last_error(void) {
    return g_last_error.c_str();
}

void qgj_string_free(char* s) {
    std::free(s);
}

qgj_status qgj_system_parse(const char* text, qgj_system** out) {
    if (!text || !out) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        *out = new qgj_system{qgj::parse_system(text)};
        return QGJ_OK;
    });
}

qgj_status qgj_system_load(const char* path, qgj_system** out) {
    if (!path || !out) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    try {
        *out = new qgj_system{qgj::load_system(path)};
        return QGJ_OK;
    } catch (const qgj::ParseError& e) {
        set_error(std::string(path) + ": " + e.what());
        return QGJ_ERR_PARSE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QGJ_ERR_IO;
    }
}

void qgj_system_free(qgj_system* system) {
    delete system;
}

int qgj_system_rows(const qgj_system* system) {
    return system ? int(system->value.coefficients.rows()) : 0;
}

int qgj_system_cols(const qgj_system* system) {
    return system ? int(system->value.coefficients.cols()) : 0;
}

qgj_status qgj_run_rref(const qgj_system* system, const char* pivot,
                        unsigned long long seed, int show_ledger,
                        const char* format, char** out) {
    if (!system || !pivot || !format || !out) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        *out = dup_string(qgj::run_rref_report(system->value, pivot, seed, show_ledger != 0,
                                               qgj::parse_format(format)));
        return *out ? QGJ_OK : QGJ_ERR_INTERNAL;
    });
}

qgj_status qgj_run_solve(const qgj_system* system, const char* format, char** out,
                         int* solvable) {
    if (!system || !format || !out) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        bool ok = true;
        *out = dup_string(qgj::run_solve_report(system->value, qgj::parse_format(format), ok));
        if (solvable)
            *solvable = ok ? 1 : 0;
        return *out ? QGJ_OK : QGJ_ERR_INTERNAL;
    });
}

qgj_status qgj_run_grover(int n_qubits, const unsigned long long* marked, size_t n_marked,
                          unsigned long long seed, long long fixed_iterations,
                          const char* format, char** out) {
    if (!format || !out || (n_marked > 0 && !marked)) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        std::vector<std::uint64_t> marks(marked, marked + n_marked);
        *out = dup_string(qgj::run_grover_report(n_qubits, marks, seed, fixed_iterations,
                                                 qgj::parse_format(format)));
        return *out ? QGJ_OK : QGJ_ERR_INTERNAL;
    });
}

qgj_status qgj_run_deutsch(int f0, int f1, const char* format, char** out) {
    if (!format || !out) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    if ((f0 != 0 && f0 != 1) || (f1 != 0 && f1 != 1)) {
        set_error("deutsch: table entries must be 0 or 1");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        *out = dup_string(qgj::run_deutsch_report(f0 != 0, f1 != 0, qgj::parse_format(format)));
        return *out ? QGJ_OK : QGJ_ERR_INTERNAL;
    });
}

qgj_status qgj_run_add(int n_qubits, unsigned long long a, unsigned long long b,
                       int trace, const char* format, char** out) {
    if (!format || !out) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        *out = dup_string(qgj::run_add_report(n_qubits, a, b, trace != 0,
                                              qgj::parse_format(format)));
        return *out ? QGJ_OK : QGJ_ERR_INTERNAL;
    });
}

qgj_status qgj_run_cost(int max_n, int simulate, unsigned long long seed,
                        const char* format, char** out) {
    if (!format || !out) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        *out = dup_string(qgj::run_cost_report(max_n, simulate != 0, seed,
                                               qgj::parse_format(format)));
        return *out ? QGJ_OK : QGJ_ERR_INTERNAL;
    });
}

double qgj_paper_cost_total(int n_dim) {
    return n_dim >= 1 ? qgj::paper_cost_total(n_dim) : 0.0;
}

double qgj_closed_form_cost(int n_dim) {
    return n_dim >= 1 ? qgj::closed_form_cost(n_dim) : 0.0;
}

unsigned long long qgj_sum_of_squares(unsigned long long n) {
    return qgj::sum_of_squares(n);
}

qgj_status qgj_quantum_add(int n_qubits, unsigned long long a, unsigned long long b,
                           unsigned long long* out) {
    if (!out) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        *out = qgj::quantum_add(a, b, n_qubits);
        return QGJ_OK;
    });
}

qgj_status qgj_deutsch_classify(int f0, int f1, int* balanced) {
    if (!balanced) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    if ((f0 != 0 && f0 != 1) || (f1 != 0 && f1 != 1)) {
        set_error("deutsch: table entries must be 0 or 1");
        return QGJ_ERR_INVALID_ARG;
    }
    *balanced = qgj::deutsch_classify(f0 != 0, f1 != 0) == qgj::DeutschClass::Balanced ? 1 : 0;
    return QGJ_OK;
}

qgj_status qgj_grover_search(int n_qubits, const unsigned long long* marked, size_t n_marked,
                             unsigned long long seed, long long* found,
                             unsigned long long* oracle_queries, unsigned long long* iterations) {
    if (!found || (n_marked > 0 && !marked)) {
        set_error("null argument");
        return QGJ_ERR_INVALID_ARG;
    }
    return guarded([&] {
        std::vector<std::uint64_t> marks(marked, marked + n_marked);
        qgj::Oracle oracle = qgj::Oracle::from_marked(n_qubits, marks);
        std::mt19937_64 rng(seed);
        const qgj::GroverPlan plan = qgj::GroverPlan::with_unknown_count(n_qubits);
        const qgj::SearchResult result = qgj::grover_search(oracle, rng, plan, true);
        *found = result.found ? (long long)(*result.found) : -1;
        if (oracle_queries)
            *oracle_queries = result.oracle_queries;
        if (iterations)
            *iterations = result.grover_iterations;
        return QGJ_OK;
    });
}

}  // extern "C"
