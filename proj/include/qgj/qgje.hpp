#ifndef QGJ_QGJE_HPP
#define QGJ_QGJE_HPP

#include "qgj/cost.hpp"
#include "qgj/grover.hpp"
#include "qgj/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qgj {

/// Sum over rounds n = 1..N of 2^{n/2} + 2(n-1)^2 + 2(n-1) + 1 + 1,
/// evaluated term by term in real arithmetic.
double paper_cost_total(int n_dim);

/// Closed form algebraically equal to paper_cost_total:
/// N(N+1) + (N-1)N(2N-1)/3 + sqrt(2)(sqrt(2)^N - 1)/(sqrt(2) - 1).
double closed_form_cost(int n_dim);

/// The closed form as printed in the source theorem,
/// N(N-1)(2N+1)/3 + sqrt(2)(sqrt(2)^N - 1)/(sqrt(2) - 1). Its polynomial
/// part does not match the summation; reported for comparison only.
double printed_closed_form_cost(int n_dim);

/// N(N+1)(2N+1)/6, exact.
std::uint64_t sum_of_squares(std::uint64_t n);

/// Pivot search over one column tail via a simulated Grover run: the oracle
/// marks nonzero entries over a power-of-two register (padding unmarked),
/// candidates are verified, and a classical scan is the terminal fallback.
std::optional<std::size_t> grover_pivot(std::span<const Rational> column, std::size_t start,
                                        CostLedger& ledger, std::mt19937_64& rng);

class GroverPivotStrategy final : public PivotStrategy {
public:
    explicit GroverPivotStrategy(std::uint64_t seed) : rng_(seed) {}

    std::optional<std::size_t> find_pivot(std::span<const Rational> column,
                                          std::size_t start, CostLedger& ledger) override {
        return grover_pivot(column, start, ledger, rng_);
    }
    std::string_view name() const override { return "grover"; }

private:
    std::mt19937_64 rng_;
};

struct QgjeReport {
    RrefResult rref_result;
    CostLedger ledger;             // actual simulated charges
    int formula_dimension;         // N used for the formula columns
    double paper_total;
    double closed_form_total;
    double ratio_to_2_half_n;      // closed_form_total / 2^{N/2}
};

/// Gauss-Jordan elimination with Grover pivot search plus the cost audit.
QgjeReport qgje_rref(const AugmentedSystem& system, std::uint64_t seed);

struct CostRow {
    int n_dim;
    double paper_total;
    double closed_form;
    double floored_closed_form;    // integer-part bracket on the geometric term
    std::optional<double> simulated_mean;
    double ratio_to_2_half_n;
};

/// One row per N = 1..max_n. Simulated totals run random invertible N x N
/// rational systems and are capped at N <= 10.
std::vector<CostRow> cost_report(int max_n, bool simulate, std::uint64_t seed);

}  // namespace qgj

#endif
