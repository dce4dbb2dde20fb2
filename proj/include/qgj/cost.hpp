#ifndef QGJ_COST_HPP
#define QGJ_COST_HPP

#include <cstdint>

namespace qgj {

/// Typed operation counters auditing an elimination / search run.
/// All counters only ever increase during a run.
struct CostLedger {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
    std::uint64_t subtractions = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t control_ops = 0;
    std::uint64_t grover_iterations = 0;
    std::uint64_t oracle_queries = 0;
    std::uint64_t measurements = 0;

    std::uint64_t total() const {
        return multiplications + additions + subtractions + comparisons +
               control_ops + grover_iterations + oracle_queries + measurements;
    }
};

}  // namespace qgj

#endif
