#ifndef QGJ_REPORTS_HPP
#define QGJ_REPORTS_HPP

#include "qgj/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qgj {

enum class ReportFormat { Text, Csv, Json };

ReportFormat parse_format(const std::string& name);  // "text" | "csv" | "json"

/// Deterministic rendering of a real: 5 significant digits, '.' decimal point.
std::string format_real(double v);

// Each runner renders one subcommand's full report. Output is byte-stable
// for a fixed (input, seed) pair.
std::string run_rref_report(const AugmentedSystem& system, const std::string& pivot_name,
                            std::uint64_t seed, bool show_ledger, ReportFormat format);

/// `solvable` is set false when the system is inconsistent.
std::string run_solve_report(const AugmentedSystem& system, ReportFormat format,
                             bool& solvable);

std::string run_grover_report(int n_qubits, const std::vector<std::uint64_t>& marked,
                              std::uint64_t seed, long long fixed_iterations,
                              ReportFormat format);

std::string run_deutsch_report(bool f0, bool f1, ReportFormat format);

std::string run_add_report(int n_qubits, std::uint64_t a, std::uint64_t b, bool trace,
                           ReportFormat format);

std::string run_cost_report(int max_n, bool simulate, std::uint64_t seed,
                            ReportFormat format);

}  // namespace qgj

#endif
