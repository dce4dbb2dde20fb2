#include "qgj/grover.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace qgj {

Oracle::Oracle(int n_qubits, std::function<bool(std::uint64_t)> predicate)
    : n_qubits_(n_qubits), predicate_(std::move(predicate)) {
    if (n_qubits < 1)
        throw std::invalid_argument("Oracle: need at least one qubit");
    if (!predicate_)
        throw std::invalid_argument("Oracle: empty predicate");
}

Oracle Oracle::from_marked(int n_qubits, const std::vector<std::uint64_t>& marked) {
    auto set = std::make_shared<std::unordered_set<std::uint64_t>>(marked.begin(), marked.end());
    return Oracle(n_qubits, [set](std::uint64_t i) { return set->count(i) != 0; });
}

StateVector uniform_state(int n_qubits) {
    StateVector s = StateVector::basis_state(n_qubits, 0);
    for (int w = 0; w < n_qubits; ++w)
        s = apply_hadamard(s, w);
    return s;
}

StateVector oracle_reflect(const StateVector& s, const Oracle& oracle) {
    if (oracle.n_qubits() != s.n_qubits())
        throw std::invalid_argument("oracle_reflect: register size mismatch");
    ++oracle.query_count_;  // one quantum query per application
    std::vector<Amplitude> out = s.amplitudes();
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        if (oracle.predicate_(i))
            out[i] = -out[i];
    }
    return StateVector(s.n_qubits(), std::move(out));
}

StateVector diffusion(const StateVector& s) {
    Amplitude mean = 0.0;
    for (const Amplitude& a : s.amplitudes())
        mean += a;
    mean /= double(s.dimension());
    std::vector<Amplitude> out = s.amplitudes();
    for (Amplitude& a : out)
        a = 2.0 * mean - a;
    return StateVector(s.n_qubits(), std::move(out));
}

StateVector grover_iterate(const StateVector& s, const Oracle& oracle) {
    return diffusion(oracle_reflect(s, oracle));
}

std::uint64_t iteration_count(std::uint64_t search_space, std::uint64_t marked_count) {
    if (marked_count < 1 || marked_count > search_space)
        throw std::invalid_argument("iteration_count: need 1 <= t <= K");
    const double phi = std::asin(std::sqrt(double(marked_count) / double(search_space)));
    const double m = std::numbers::pi / (4.0 * phi) - 0.5;
    return m <= 0.0 ? 0 : std::uint64_t(std::llround(m));
}

GroverPlan GroverPlan::with_known_count(int n_qubits, std::uint64_t marked_count) {
    const std::uint64_t k = std::uint64_t(1) << n_qubits;
    return {n_qubits, k, marked_count, {iteration_count(k, marked_count)}};
}

GroverPlan GroverPlan::with_unknown_count(int n_qubits) {
    const std::uint64_t k = std::uint64_t(1) << n_qubits;
    GroverPlan plan{n_qubits, k, std::nullopt, {}};
    for (int j = 0; j <= n_qubits; ++j) {
        const double m = (std::numbers::pi / 4.0) * std::sqrt(double(k) / double(std::uint64_t(1) << j));
        plan.retry_schedule.push_back(std::uint64_t(std::floor(m)));
    }
    return plan;
}

GroverPlan GroverPlan::with_fixed_iterations(int n_qubits, std::uint64_t m) {
    const std::uint64_t k = std::uint64_t(1) << n_qubits;
    return {n_qubits, k, std::nullopt, {m}};
}

SearchResult grover_search(const Oracle& oracle, std::mt19937_64& rng,
                           const GroverPlan& plan, bool classical_fallback) {
    if (plan.n_qubits != oracle.n_qubits())
        throw std::invalid_argument("grover_search: plan size mismatch");
    const std::uint64_t before = oracle.query_count();
    SearchResult result;

    for (std::uint64_t m : plan.retry_schedule) {
        StateVector s = uniform_state(plan.n_qubits);
        for (std::uint64_t it = 0; it < m; ++it) {
            s = grover_iterate(s, oracle);
            ++result.grover_iterations;
        }
        // marked probability of this attempt (diagnostic, no oracle charge)
        double p_marked = 0.0;
        {
            const auto probs = probabilities(s);
            for (std::uint64_t i = 0; i < probs.size(); ++i)
                if (oracle.predicate_(i))
                    p_marked += probs[i];
        }
        result.attempt_success_probabilities.push_back(p_marked);

        const MeasurementOutcome outcome = measure(s, rng);
        ++result.measurements;
        if (oracle.query(outcome.basis_index)) {
            result.found = outcome.basis_index;
            result.verified = true;
            result.oracle_queries = oracle.query_count() - before;
            return result;
        }
    }

    if (classical_fallback) {
        result.used_fallback = true;
        for (std::uint64_t i = 0; i < plan.search_space; ++i) {
            if (oracle.query(i)) {
                result.found = i;
                result.verified = true;
                break;
            }
        }
    }
    result.oracle_queries = oracle.query_count() - before;
    return result;
}

DeutschClass deutsch_classify(bool f0, bool f1) {
    // wire 0: input, wire 1: ancilla prepared in |1>
    StateVector s = StateVector::basis_state(2, 0b10);
    s = apply_hadamard(s, 0);
    s = apply_hadamard(s, 1);

    // U_f |x, y> = |x, y XOR f(x)>: swap the ancilla pair where f(x) = 1
    std::vector<Amplitude> amps = s.amplitudes();
    for (std::uint64_t x = 0; x < 2; ++x) {
        const bool fx = x == 0 ? f0 : f1;
        if (fx)
            std::swap(amps[x], amps[x | 0b10]);
    }
    s = StateVector(2, std::move(amps));

    s = apply_hadamard(s, 0);
    const auto probs = probabilities(s);
    const double p1 = probs[0b01] + probs[0b11];
    return p1 > 0.5 ? DeutschClass::Balanced : DeutschClass::Constant;
}

}  // namespace qgj
