#ifndef QGJ_MATRIX_HPP
#define QGJ_MATRIX_HPP

#include "qgj/cost.hpp"
#include "qgj/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qgj {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
    }
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const {
        check_index(r, c);
        return entries_[r * cols_ + c];
    }
    Rational& at(std::size_t r, std::size_t c) {
        check_index(r, c);
        return entries_[r * cols_ + c];
    }

    std::vector<Rational> column(std::size_t c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("Matrix: index out of range");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Coefficient matrix joined with a right-hand side.
struct AugmentedSystem {
    Matrix coefficients;
    std::vector<Rational> rhs;

    AugmentedSystem(Matrix coeffs, std::vector<Rational> b);

    /// m x (n+1) matrix [A|b].
    Matrix augmented() const;

    /// Splits the last column of an m x (n+1) matrix off as the rhs.
    static AugmentedSystem from_augmented(const Matrix& aug);
};

struct RowOperation {
    enum class Kind { Scale, Axpy, Swap };
    Kind kind;
    std::size_t i = 0;  // Scale/Axpy: destination row; Swap: first row
    std::size_t j = 0;  // Axpy: source row; Swap: second row
    Rational factor;    // Scale/Axpy only
};

// Elementary row operations. Each returns a new matrix.
Matrix scale_row(const Matrix& m, std::size_t row, const Rational& factor);
Matrix axpy_row(const Matrix& m, std::size_t src, std::size_t dst, const Rational& factor);
Matrix swap_rows(const Matrix& m, std::size_t i, std::size_t j);

/// Replays a row-operation log against `start`, charging `ledger` with the
/// same per-operation costs the eliminator uses.
Matrix replay_log(const Matrix& start, std::span<const RowOperation> log, CostLedger& ledger);

/// Returns the smallest i >= start with column[i] != 0, charging one
/// comparison per inspected entry.
std::optional<std::size_t> classical_pivot_scan(std::span<const Rational> column,
                                                std::size_t start, CostLedger& ledger);

/// Seam where the classical scan and the Grover search interchange. A
/// strategy must only ever return an index whose entry is nonzero.
class PivotStrategy {
public:
    virtual ~PivotStrategy() = default;
    virtual std::optional<std::size_t> find_pivot(std::span<const Rational> column,
                                                  std::size_t start, CostLedger& ledger) = 0;
    virtual std::string_view name() const = 0;
};

class ClassicalScanStrategy final : public PivotStrategy {
public:
    std::optional<std::size_t> find_pivot(std::span<const Rational> column,
                                          std::size_t start, CostLedger& ledger) override {
        return classical_pivot_scan(column, start, ledger);
    }
    std::string_view name() const override { return "classical"; }
};

struct RrefResult {
    Matrix reduced;             // m x (n+1), augmented form
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;  // ascending, length == rank
    std::vector<RowOperation> row_op_log;
};

/// Gauss-Jordan elimination of [A|b] with a pluggable pivot search.
/// Forward phase produces leading ones and clears below, backward phase
/// clears above each pivot. The rhs column is never searched for pivots.
RrefResult rref(const AugmentedSystem& system, PivotStrategy& pivot, CostLedger& ledger);

struct SolutionSpace {
    enum class Kind { Unique, Affine, Inconsistent };
    Kind kind;
    std::vector<Rational> particular;            // empty when Inconsistent
    std::vector<std::vector<Rational>> basis;    // n - r vectors, empty when Unique
};

/// Extracts the affine solution set from the RREF of the system.
SolutionSpace solve(const AugmentedSystem& system);
SolutionSpace solution_from_rref(const RrefResult& result);

}  // namespace qgj

#endif
