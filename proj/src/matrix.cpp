#include "qgj/matrix.hpp"

#include <algorithm>
#include <utility>

namespace qgj {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("Matrix: dimensions must be positive");
    if (entries_.size() != rows * cols)
        throw std::invalid_argument("Matrix: entry count does not match dimensions");
}

std::vector<Rational> Matrix::column(std::size_t c) const {
    if (c >= cols_)
        throw std::out_of_range("Matrix: column out of range");
    std::vector<Rational> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(entries_[r * cols_ + c]);
    return out;
}

AugmentedSystem::AugmentedSystem(Matrix coeffs, std::vector<Rational> b)
    : coefficients(std::move(coeffs)), rhs(std::move(b)) {
    if (rhs.size() != coefficients.rows())
        throw std::invalid_argument("AugmentedSystem: rhs length must equal row count");
}

Matrix AugmentedSystem::augmented() const {
    const std::size_t m = coefficients.rows();
    const std::size_t n = coefficients.cols();
    Matrix aug(m, n + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug.at(r, c) = coefficients.at(r, c);
        aug.at(r, n) = rhs[r];
    }
    return aug;
}

AugmentedSystem AugmentedSystem::from_augmented(const Matrix& aug) {
    if (aug.cols() < 2)
        throw std::invalid_argument("AugmentedSystem: need at least one coefficient column");
    const std::size_t m = aug.rows();
    const std::size_t n = aug.cols() - 1;
    Matrix coeffs(m, n);
    std::vector<Rational> rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            coeffs.at(r, c) = aug.at(r, c);
        rhs[r] = aug.at(r, n);
    }
    return AugmentedSystem(std::move(coeffs), std::move(rhs));
}

Matrix scale_row(const Matrix& m, std::size_t row, const Rational& factor) {
    if (row >= m.rows())
        throw std::out_of_range("scale_row: row out of range");
    if (factor.is_zero())
        throw std::invalid_argument("scale_row: zero factor");
    Matrix out = m;
    for (std::size_t c = 0; c < m.cols(); ++c)
        out.at(row, c) = m.at(row, c) * factor;
    return out;
}

Matrix axpy_row(const Matrix& m, std::size_t src, std::size_t dst, const Rational& factor) {
    if (src >= m.rows() || dst >= m.rows())
        throw std::out_of_range("axpy_row: row out of range");
    if (src == dst)
        throw std::invalid_argument("axpy_row: source and destination rows coincide");
    Matrix out = m;
    for (std::size_t c = 0; c < m.cols(); ++c)
        out.at(dst, c) = m.at(dst, c) + factor * m.at(src, c);
    return out;
}

Matrix swap_rows(const Matrix& m, std::size_t i, std::size_t j) {
    if (i >= m.rows() || j >= m.rows())
        throw std::out_of_range("swap_rows: row out of range");
    Matrix out = m;
    if (i == j)
        return out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        out.at(i, c) = m.at(j, c);
        out.at(j, c) = m.at(i, c);
    }
    return out;
}

namespace {

// A row of C entries costs C-1 multiplications to normalize and
// C-1 multiplications plus C-1 additions to eliminate (the pivot slot is
// known in advance); swaps are free.
void charge_op(const RowOperation& op, std::size_t cols, CostLedger& ledger) {
    switch (op.kind) {
    case RowOperation::Kind::Scale:
        ledger.multiplications += cols - 1;
        break;
    case RowOperation::Kind::Axpy:
        ledger.multiplications += cols - 1;
        ledger.additions += cols - 1;
        break;
    case RowOperation::Kind::Swap:
        break;
    }
}

Matrix apply_op(const Matrix& m, const RowOperation& op) {
    switch (op.kind) {
    case RowOperation::Kind::Scale:
        return scale_row(m, op.i, op.factor);
    case RowOperation::Kind::Axpy:
        return axpy_row(m, op.j, op.i, op.factor);
    case RowOperation::Kind::Swap:
        return swap_rows(m, op.i, op.j);
    }
    throw std::logic_error("apply_op: unknown kind");
}

}  // namespace

Matrix replay_log(const Matrix& start, std::span<const RowOperation> log, CostLedger& ledger) {
    Matrix m = start;
    for (const RowOperation& op : log) {
        m = apply_op(m, op);
        charge_op(op, m.cols(), ledger);
    }
    return m;
}

std::optional<std::size_t> classical_pivot_scan(std::span<const Rational> column,
                                                std::size_t start, CostLedger& ledger) {
    for (std::size_t i = start; i < column.size(); ++i) {
        ++ledger.comparisons;
        if (!column[i].is_zero())
            return i;
    }
    return std::nullopt;
}

RrefResult rref(const AugmentedSystem& system, PivotStrategy& pivot, CostLedger& ledger) {
    Matrix a = system.augmented();
    const std::size_t m = a.rows();
    const std::size_t n = a.cols() - 1;  // rhs column is never a pivot candidate

    RrefResult result{a, 0, {}, {}};
    auto emit = [&](RowOperation op) {
        a = apply_op(a, op);
        charge_op(op, a.cols(), ledger);
        result.row_op_log.push_back(std::move(op));
    };

    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        auto found = pivot.find_pivot(a.column(col), row, ledger);
        // per-round counter update and loop check
        ledger.subtractions += 1;
        ledger.control_ops += 1;
        if (!found)
            continue;
        if (*found != row)
            emit({RowOperation::Kind::Swap, row, *found, Rational()});
        if (a.at(row, col) != Rational(1))
            emit({RowOperation::Kind::Scale, row, 0, a.at(row, col).reciprocal()});
        for (std::size_t r = row + 1; r < m; ++r) {
            if (!a.at(r, col).is_zero())
                emit({RowOperation::Kind::Axpy, r, row, -a.at(r, col)});
        }
        result.pivot_columns.push_back(col);
        ++row;
    }
    result.rank = result.pivot_columns.size();

    // canonicalize the rhs column: an inconsistent system leaves residual rhs
    // entries below the rank whose values depend on the pivot choices; reducing
    // them to a single unit contradiction row restores uniqueness of the output
    std::optional<std::size_t> contradiction_row;
    if (row < m) {
        auto found = pivot.find_pivot(a.column(n), row, ledger);
        ledger.subtractions += 1;
        ledger.control_ops += 1;
        if (found) {
            if (*found != row)
                emit({RowOperation::Kind::Swap, row, *found, Rational()});
            if (a.at(row, n) != Rational(1))
                emit({RowOperation::Kind::Scale, row, 0, a.at(row, n).reciprocal()});
            for (std::size_t r = row + 1; r < m; ++r) {
                if (!a.at(r, n).is_zero())
                    emit({RowOperation::Kind::Axpy, r, row, -a.at(r, n)});
            }
            contradiction_row = row;
        }
    }

    // backward phase: clear above each pivot, last pivot first
    if (contradiction_row) {
        for (std::size_t r = 0; r < *contradiction_row; ++r) {
            if (!a.at(r, n).is_zero())
                emit({RowOperation::Kind::Axpy, r, *contradiction_row, -a.at(r, n)});
        }
        ledger.subtractions += 1;
        ledger.control_ops += 1;
    }
    for (std::size_t k = result.rank; k-- > 0;) {
        const std::size_t pcol = result.pivot_columns[k];
        for (std::size_t r = 0; r < k; ++r) {
            if (!a.at(r, pcol).is_zero())
                emit({RowOperation::Kind::Axpy, r, k, -a.at(r, pcol)});
        }
        ledger.subtractions += 1;
        ledger.control_ops += 1;
    }

    result.reduced = std::move(a);
    return result;
}

SolutionSpace solution_from_rref(const RrefResult& result) {
    const Matrix& a = result.reduced;
    const std::size_t n = a.cols() - 1;
    const std::size_t r = result.rank;

    // contradiction row [0 ... 0 | c], c != 0
    for (std::size_t row = 0; row < a.rows(); ++row) {
        bool coeffs_zero = true;
        for (std::size_t c = 0; c < n && coeffs_zero; ++c)
            coeffs_zero = a.at(row, c).is_zero();
        if (coeffs_zero && !a.at(row, n).is_zero())
            return {SolutionSpace::Kind::Inconsistent, {}, {}};
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : result.pivot_columns)
        is_pivot[c] = true;

    std::vector<Rational> particular(n);
    for (std::size_t k = 0; k < r; ++k)
        particular[result.pivot_columns[k]] = a.at(k, n);

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(n);
        v[f] = Rational(1);
        for (std::size_t k = 0; k < r; ++k)
            v[result.pivot_columns[k]] = -a.at(k, f);
        basis.push_back(std::move(v));
    }

    const auto kind = (r == n) ? SolutionSpace::Kind::Unique : SolutionSpace::Kind::Affine;
    return {kind, std::move(particular), std::move(basis)};
}

SolutionSpace solve(const AugmentedSystem& system) {
    ClassicalScanStrategy scan;
    CostLedger scratch;
    return solution_from_rref(rref(system, scan, scratch));
}

}  // namespace qgj
