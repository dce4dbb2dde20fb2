#include "qgj/qgje.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qgj {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double geometric_term(int n_dim) {
    // sum_{n=1}^N sqrt(2)^n
    return kSqrt2 * (std::pow(kSqrt2, n_dim) - 1.0) / (kSqrt2 - 1.0);
}

int ceil_log2(std::uint64_t v) {
    int n = 0;
    while ((std::uint64_t(1) << n) < v)
        ++n;
    return n;
}

}  // namespace

double paper_cost_total(int n_dim) {
    if (n_dim < 1)
        throw std::invalid_argument("paper_cost_total: dimension must be >= 1");
    double total = 0.0;
    for (int n = 1; n <= n_dim; ++n) {
        const double nm1 = double(n - 1);
        total += std::pow(2.0, n / 2.0) + 2.0 * nm1 * nm1 + 2.0 * nm1 + 1.0 + 1.0;
    }
    return total;
}

double closed_form_cost(int n_dim) {
    if (n_dim < 1)
        throw std::invalid_argument("closed_form_cost: dimension must be >= 1");
    const double n = n_dim;
    const double polynomial = n * (n + 1.0) + (n - 1.0) * n * (2.0 * n - 1.0) / 3.0;
    return polynomial + geometric_term(n_dim);
}

double printed_closed_form_cost(int n_dim) {
    if (n_dim < 1)
        throw std::invalid_argument("printed_closed_form_cost: dimension must be >= 1");
    const double n = n_dim;
    return n * (n - 1.0) * (2.0 * n + 1.0) / 3.0 + std::floor(geometric_term(n_dim));
}

std::uint64_t sum_of_squares(std::uint64_t n) {
    return n * (n + 1) * (2 * n + 1) / 6;
}

std::optional<std::size_t> grover_pivot(std::span<const Rational> column, std::size_t start,
                                        CostLedger& ledger, std::mt19937_64& rng) {
    if (start > column.size())
        throw std::out_of_range("grover_pivot: start beyond column end");
    const std::size_t len = column.size() - start;
    if (len == 0)
        return std::nullopt;

    const int n_qubits = std::max(1, ceil_log2(len));
    // padding indices beyond the column tail stay unmarked
    Oracle oracle(n_qubits, [column, start, len](std::uint64_t i) {
        return i < len && !column[start + i].is_zero();
    });

    const GroverPlan plan = GroverPlan::with_unknown_count(n_qubits);
    const SearchResult result = grover_search(oracle, rng, plan, /*classical_fallback=*/true);

    ledger.grover_iterations += result.grover_iterations;
    ledger.oracle_queries += result.oracle_queries;
    ledger.measurements += result.measurements;

    if (!result.found)
        return std::nullopt;
    return start + *result.found;
}

QgjeReport qgje_rref(const AugmentedSystem& system, std::uint64_t seed) {
    GroverPivotStrategy strategy(seed);
    CostLedger ledger;
    RrefResult rref_result = rref(system, strategy, ledger);

    const int n_dim = int(system.coefficients.rows());
    const double paper = paper_cost_total(n_dim);
    const double closed = closed_form_cost(n_dim);
    return {std::move(rref_result), ledger, n_dim, paper, closed,
            closed / std::pow(2.0, n_dim / 2.0)};
}

namespace {

AugmentedSystem random_invertible_system(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    for (;;) {
        Matrix a(n, n);
        std::vector<Rational> b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c)
                a.at(r, c) = Rational(entry(rng));
            b[r] = Rational(entry(rng));
        }
        AugmentedSystem system(std::move(a), std::move(b));
        ClassicalScanStrategy scan;
        CostLedger scratch;
        if (rref(system, scan, scratch).rank == n)
            return system;
    }
}

}  // namespace

std::vector<CostRow> cost_report(int max_n, bool simulate, std::uint64_t seed) {
    if (max_n < 1)
        throw std::invalid_argument("cost_report: max dimension must be >= 1");
    constexpr int kSimCap = 10;
    constexpr int kSimRuns = 3;

    std::vector<CostRow> rows;
    rows.reserve(max_n);
    for (int n = 1; n <= max_n; ++n) {
        CostRow row{n, paper_cost_total(n), closed_form_cost(n), 0.0, std::nullopt, 0.0};
        const double n_d = n;
        row.floored_closed_form =
            n_d * (n_d + 1.0) + (n_d - 1.0) * n_d * (2.0 * n_d - 1.0) / 3.0 +
            std::floor(geometric_term(n));
        row.ratio_to_2_half_n = row.closed_form / std::pow(2.0, n / 2.0);

        if (simulate && n <= kSimCap) {
            std::mt19937_64 rng(seed ^ (std::uint64_t(n) * 0x9e3779b97f4a7c15ull));
            double sum = 0.0;
            for (int run = 0; run < kSimRuns; ++run) {
                const AugmentedSystem system = random_invertible_system(std::size_t(n), rng);
                const QgjeReport report = qgje_rref(system, rng());
                sum += double(report.ledger.total());
            }
            row.simulated_mean = sum / kSimRuns;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qgj
