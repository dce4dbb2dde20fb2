#include "qgj/reports.hpp"

#include "qgj/grover.hpp"
#include "qgj/matrix_io.hpp"
#include "qgj/qft_arith.hpp"
#include "qgj/qgje.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qgj {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.5g", v);
    return buf;
}

namespace {

double rounded(double v) {
    return std::stod(format_real(v));
}

void require_not_csv(ReportFormat format, const char* command) {
    if (format == ReportFormat::Csv)
        throw std::invalid_argument(std::string("csv output is not supported for ") + command);
}

ordered_json ledger_json(const CostLedger& ledger) {
    return ordered_json{{"multiplications", ledger.multiplications},
                        {"additions", ledger.additions},
                        {"subtractions", ledger.subtractions},
                        {"comparisons", ledger.comparisons},
                        {"control_ops", ledger.control_ops},
                        {"grover_iterations", ledger.grover_iterations},
                        {"oracle_queries", ledger.oracle_queries},
                        {"measurements", ledger.measurements},
                        {"total", ledger.total()}};
}

void ledger_text(std::ostringstream& out, const CostLedger& ledger) {
    out << "multiplications: " << ledger.multiplications << "\n"
        << "additions: " << ledger.additions << "\n"
        << "subtractions: " << ledger.subtractions << "\n"
        << "comparisons: " << ledger.comparisons << "\n"
        << "control_ops: " << ledger.control_ops << "\n"
        << "grover_iterations: " << ledger.grover_iterations << "\n"
        << "oracle_queries: " << ledger.oracle_queries << "\n"
        << "measurements: " << ledger.measurements << "\n"
        << "total: " << ledger.total() << "\n";
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(format_rational(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string vector_text(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ' ';
        out += format_rational(v[i]);
    }
    return out;
}

ordered_json vector_json(const std::vector<Rational>& v) {
    ordered_json out = ordered_json::array();
    for (const Rational& r : v)
        out.push_back(format_rational(r));
    return out;
}

}  // namespace

std::string run_rref_report(const AugmentedSystem& system, const std::string& pivot_name,
                            std::uint64_t seed, bool show_ledger, ReportFormat format) {
    require_not_csv(format, "rref");

    CostLedger ledger;
    RrefResult result{Matrix(1, 1), 0, {}, {}};
    if (pivot_name == "classical") {
        ClassicalScanStrategy scan;
        result = rref(system, scan, ledger);
    } else if (pivot_name == "grover") {
        GroverPivotStrategy strategy(seed);
        result = rref(system, strategy, ledger);
    } else {
        throw std::invalid_argument("unknown pivot strategy '" + pivot_name + "'");
    }

    if (format == ReportFormat::Json) {
        ordered_json j{{"command", "rref"},
                       {"pivot", pivot_name},
                       {"seed", seed},
                       {"rank", result.rank},
                       {"pivot_columns", result.pivot_columns},
                       {"reduced", matrix_json(result.reduced)}};
        if (show_ledger)
            j["ledger"] = ledger_json(ledger);
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "rref (pivot=" << pivot_name << ", seed=" << seed << ")\n";
    out << "rank: " << result.rank << "\n";
    out << "pivot_columns:";
    for (std::size_t c : result.pivot_columns)
        out << ' ' << c;
    out << "\n";
    out << "reduced:\n" << format_matrix(result.reduced);
    if (show_ledger) {
        out << "ledger:\n";
        ledger_text(out, ledger);
    }
    return out.str();
}

std::string run_solve_report(const AugmentedSystem& system, ReportFormat format,
                             bool& solvable) {
    require_not_csv(format, "solve");
    const SolutionSpace space = solve(system);
    solvable = space.kind != SolutionSpace::Kind::Inconsistent;

    const char* kind = space.kind == SolutionSpace::Kind::Unique     ? "unique"
                       : space.kind == SolutionSpace::Kind::Affine   ? "affine"
                                                                     : "inconsistent";

    if (format == ReportFormat::Json) {
        ordered_json j{{"command", "solve"}, {"kind", kind}};
        if (solvable) {
            j["particular"] = vector_json(space.particular);
            ordered_json basis = ordered_json::array();
            for (const auto& v : space.basis)
                basis.push_back(vector_json(v));
            j["basis"] = std::move(basis);
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "solution: " << kind << "\n";
    if (solvable) {
        out << "particular: " << vector_text(space.particular) << "\n";
        if (!space.basis.empty()) {
            out << "basis:\n";
            for (const auto& v : space.basis)
                out << vector_text(v) << "\n";
        }
    }
    return out.str();
}

std::string run_grover_report(int n_qubits, const std::vector<std::uint64_t>& marked,
                              std::uint64_t seed, long long fixed_iterations,
                              ReportFormat format) {
    require_not_csv(format, "grover");
    if (n_qubits < 1)
        throw std::invalid_argument("grover: need at least one qubit");
    const std::uint64_t dim = std::uint64_t(1) << n_qubits;
    for (std::uint64_t m : marked) {
        if (m >= dim)
            throw std::invalid_argument("grover: marked index out of range");
    }

    const GroverPlan plan = fixed_iterations >= 0
                                ? GroverPlan::with_fixed_iterations(n_qubits, std::uint64_t(fixed_iterations))
                                : GroverPlan::with_unknown_count(n_qubits);

    Oracle oracle = Oracle::from_marked(n_qubits, marked);
    std::mt19937_64 rng(seed);
    const SearchResult result = grover_search(oracle, rng, plan, /*classical_fallback=*/true);

    // per-iterate marked-probability trace of the first scheduled attempt,
    // recomputed on a separate oracle so the search ledger stays honest
    std::vector<double> trace;
    {
        Oracle probe = Oracle::from_marked(n_qubits, marked);
        StateVector s = uniform_state(n_qubits);
        auto marked_probability = [&](const StateVector& sv) {
            double p = 0.0;
            const auto probs = probabilities(sv);
            for (std::uint64_t m : marked)
                p += probs[m];
            return p;
        };
        trace.push_back(marked_probability(s));
        for (std::uint64_t it = 0; it < plan.retry_schedule.front(); ++it) {
            s = grover_iterate(s, probe);
            trace.push_back(marked_probability(s));
        }
    }

    if (format == ReportFormat::Json) {
        ordered_json schedule = ordered_json::array();
        for (std::uint64_t m : plan.retry_schedule)
            schedule.push_back(m);
        ordered_json trace_json = ordered_json::array();
        for (double p : trace)
            trace_json.push_back(rounded(p));
        ordered_json j{{"command", "grover"},
                       {"n_qubits", n_qubits},
                       {"search_space", plan.search_space},
                       {"marked", marked},
                       {"seed", seed},
                       {"schedule", std::move(schedule)},
                       {"marked_probability_trace", std::move(trace_json)},
                       {"found", result.found ? ordered_json(*result.found) : ordered_json(nullptr)},
                       {"verified", result.verified},
                       {"used_fallback", result.used_fallback},
                       {"oracle_queries", result.oracle_queries},
                       {"grover_iterations", result.grover_iterations},
                       {"measurements", result.measurements}};
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "grover (n=" << n_qubits << ", K=" << plan.search_space << ", seed=" << seed << ")\n";
    out << "marked:";
    for (std::uint64_t m : marked)
        out << ' ' << m;
    out << "\n";
    out << "schedule:";
    for (std::uint64_t m : plan.retry_schedule)
        out << ' ' << m;
    out << "\n";
    for (std::size_t i = 0; i < trace.size(); ++i)
        out << "iterate " << i << ": marked probability " << format_real(trace[i]) << "\n";
    if (result.found)
        out << "found: " << *result.found << "\n";
    else
        out << "found: none\n";
    out << "verified: " << (result.verified ? "true" : "false") << "\n";
    out << "used_fallback: " << (result.used_fallback ? "true" : "false") << "\n";
    out << "oracle_queries: " << result.oracle_queries << "\n";
    out << "grover_iterations: " << result.grover_iterations << "\n";
    out << "measurements: " << result.measurements << "\n";
    return out.str();
}

std::string run_deutsch_report(bool f0, bool f1, ReportFormat format) {
    require_not_csv(format, "deutsch");
    const DeutschClass cls = deutsch_classify(f0, f1);
    const char* label = cls == DeutschClass::Balanced ? "balanced" : "constant";

    if (format == ReportFormat::Json) {
        ordered_json j{{"command", "deutsch"},
                       {"table", {int(f0), int(f1)}},
                       {"classification", label}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "deutsch (f = [" << int(f0) << "," << int(f1) << "])\n";
    out << "classification: " << label << "\n";
    return out.str();
}

std::string run_add_report(int n_qubits, std::uint64_t a, std::uint64_t b, bool trace,
                           ReportFormat format) {
    require_not_csv(format, "add");
    if (n_qubits < 1)
        throw std::invalid_argument("add: need at least one qubit");
    const std::uint64_t dim = std::uint64_t(1) << n_qubits;
    if (a >= dim || b >= dim)
        throw std::invalid_argument("add: operand out of range for the register");

    const std::uint64_t sum = quantum_add(a, b, n_qubits);

    // phase word per wire: fraction of a full turn accumulated on that wire
    auto phase_words = [&](std::uint64_t value) {
        std::vector<double> words;
        for (int j = 0; j < n_qubits; ++j)
            words.push_back(double((value << j) % dim) / double(dim));
        return words;
    };

    if (format == ReportFormat::Json) {
        ordered_json j{{"command", "add"},
                       {"n_qubits", n_qubits},
                       {"a", a},
                       {"b", b},
                       {"sum", sum}};
        if (trace) {
            ordered_json stages = ordered_json::array();
            for (auto [label, value] : {std::pair<const char*, std::uint64_t>{"fourier(a)", a},
                                        {"after phase rotations", (a + b) % dim}}) {
                ordered_json words = ordered_json::array();
                for (double w : phase_words(value))
                    words.push_back(rounded(w));
                stages.push_back(ordered_json{{"stage", label}, {"wire_phases", std::move(words)}});
            }
            j["trace"] = std::move(stages);
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "add (n=" << n_qubits << "): " << a << " + " << b << "\n";
    if (trace) {
        for (auto [label, value] : {std::pair<const char*, std::uint64_t>{"fourier(a)", a},
                                    {"after phase rotations", (a + b) % dim}}) {
            out << label << " wire phases:";
            for (double w : phase_words(value))
                out << ' ' << format_real(w);
            out << "\n";
        }
    }
    out << "sum: " << sum << "\n";
    return out.str();
}

std::string run_cost_report(int max_n, bool simulate, std::uint64_t seed,
                            ReportFormat format) {
    const std::vector<CostRow> rows = cost_report(max_n, simulate, seed);

    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "N,paper_total,closed_form,floored_closed_form,simulated_mean,ratio\n";
        for (const CostRow& row : rows) {
            out << row.n_dim << ',' << format_real(row.paper_total) << ','
                << format_real(row.closed_form) << ',' << format_real(row.floored_closed_form)
                << ',' << (row.simulated_mean ? format_real(*row.simulated_mean) : "") << ','
                << format_real(row.ratio_to_2_half_n) << "\n";
        }
        return out.str();
    }

    if (format == ReportFormat::Json) {
        ordered_json arr = ordered_json::array();
        for (const CostRow& row : rows) {
            arr.push_back(ordered_json{
                {"N", row.n_dim},
                {"paper_total", rounded(row.paper_total)},
                {"closed_form", rounded(row.closed_form)},
                {"floored_closed_form", rounded(row.floored_closed_form)},
                {"simulated_mean",
                 row.simulated_mean ? ordered_json(rounded(*row.simulated_mean)) : ordered_json(nullptr)},
                {"ratio", rounded(row.ratio_to_2_half_n)}});
        }
        ordered_json j{{"command", "cost"}, {"rows", std::move(arr)}};
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "N paper_total closed_form floored simulated_mean ratio\n";
    for (const CostRow& row : rows) {
        out << row.n_dim << ' ' << format_real(row.paper_total) << ' '
            << format_real(row.closed_form) << ' ' << format_real(row.floored_closed_form)
            << ' ' << (row.simulated_mean ? format_real(*row.simulated_mean) : "-") << ' '
            << format_real(row.ratio_to_2_half_n) << "\n";
    }
    return out.str();
}

}  // namespace qgj
