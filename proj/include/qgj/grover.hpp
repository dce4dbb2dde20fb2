#ifndef QGJ_GROVER_HPP
#define QGJ_GROVER_HPP

#include "qgj/state_vector.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace qgj {

struct GroverPlan;
struct SearchResult;

/// Black-box predicate over basis indices. Every classical query and every
/// quantum application charges the counter.
class Oracle {
public:
    Oracle(int n_qubits, std::function<bool(std::uint64_t)> predicate);

    static Oracle from_marked(int n_qubits, const std::vector<std::uint64_t>& marked);

    int n_qubits() const { return n_qubits_; }

    /// Classical query: one count per evaluated index.
    bool query(std::uint64_t index) const {
        ++query_count_;
        return predicate_(index);
    }

    std::uint64_t query_count() const { return query_count_; }

    friend StateVector oracle_reflect(const StateVector& s, const Oracle& oracle);
    friend SearchResult grover_search(const Oracle& oracle, std::mt19937_64& rng,
                                      const GroverPlan& plan, bool classical_fallback);

private:
    int n_qubits_;
    std::function<bool(std::uint64_t)> predicate_;
    mutable std::uint64_t query_count_ = 0;
};

/// Uniform superposition over all 2^n basis states, H^n |0>.
StateVector uniform_state(int n_qubits);

/// Phase flip on marked indices. One quantum query regardless of register size.
StateVector oracle_reflect(const StateVector& s, const Oracle& oracle);

/// Reflection 2|S><S| - I about the uniform superposition; |S> is exactly
/// fixed under this sign convention.
StateVector diffusion(const StateVector& s);

StateVector grover_iterate(const StateVector& s, const Oracle& oracle);

/// m = max(0, round(pi / (4 asin(sqrt(t/K))) - 1/2)).
std::uint64_t iteration_count(std::uint64_t search_space, std::uint64_t marked_count);

struct GroverPlan {
    int n_qubits;
    std::uint64_t search_space;                  // 2^n
    std::optional<std::uint64_t> marked_hint;
    std::vector<std::uint64_t> retry_schedule;   // iteration counts to try in order

    /// Single attempt at the optimal count for a known marked count.
    static GroverPlan with_known_count(int n_qubits, std::uint64_t marked_count);

    /// Halving guesses t = K, ..., down to t = 1 equivalents:
    /// m_j = floor((pi/4) sqrt(K / 2^j)), j = 0 .. log2 K, then fallback.
    static GroverPlan with_unknown_count(int n_qubits);

    /// Fixed iteration count, one attempt.
    static GroverPlan with_fixed_iterations(int n_qubits, std::uint64_t m);
};

struct SearchResult {
    std::optional<std::uint64_t> found;  // always verified when present
    bool verified = false;
    std::uint64_t oracle_queries = 0;
    std::uint64_t grover_iterations = 0;
    std::uint64_t measurements = 0;
    bool used_fallback = false;
    /// Marked-set probability just before each measurement, one entry per attempt.
    std::vector<double> attempt_success_probabilities;
};

/// Prepares |S>, iterates, measures, and classically verifies the candidate;
/// retries per the plan schedule and optionally falls back to a classical
/// scan. Never returns an unverified index.
SearchResult grover_search(const Oracle& oracle, std::mt19937_64& rng,
                           const GroverPlan& plan, bool classical_fallback);

enum class DeutschClass { Constant, Balanced };

/// H-f-H on the simulator with a phase-kickback ancilla; the input-qubit
/// readout is deterministic.
DeutschClass deutsch_classify(bool f0, bool f1);

}  // namespace qgj

#endif
