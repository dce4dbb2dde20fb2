#ifndef QGJ_TEST_UTIL_HPP
#define QGJ_TEST_UTIL_HPP

#include "qgj/matrix.hpp"
#include "qgj/state_vector.hpp"

#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace qgj::testutil {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = Rational(num(rng), den(rng));
    return m;
}

/// Random system mix: roughly a quarter rank-deficient (a row replaced by a
/// combination of two others) and a tenth inconsistent (that row's rhs bumped).
inline AugmentedSystem random_system(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::uniform_int_distribution<int> pct(0, 99);
    const std::size_t m = dim(rng);
    const std::size_t n = dim(rng);
    Matrix a = random_matrix(rng, m, n);
    std::vector<Rational> b;
    std::uniform_int_distribution<int> num(-6, 6);
    for (std::size_t r = 0; r < m; ++r)
        b.push_back(Rational(num(rng)));

    const int roll = pct(rng);
    if (roll < 25 && m >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        const std::size_t dst = pick(rng);
        const std::size_t src = (dst + 1) % m;
        const Rational c1(num(rng)), c2(num(rng));
        for (std::size_t col = 0; col < n; ++col)
            a.at(dst, col) = c1 * a.at(src, col) + c2 * a.at((src + 1) % m, col);
        b[dst] = c1 * b[src] + c2 * b[(src + 1) % m];
        if (roll < 10)
            b[dst] += Rational(1);
    }
    return AugmentedSystem(std::move(a), std::move(b));
}

inline std::vector<Rational> mat_vec(const Matrix& a, const std::vector<Rational>& x) {
    std::vector<Rational> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out[r] += a.at(r, c) * x[c];
    return out;
}

inline StateVector random_state(std::mt19937_64& rng, int n_qubits) {
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> amps(std::uint64_t(1) << n_qubits);
    double norm = 0.0;
    for (Amplitude& a : amps) {
        a = {gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (Amplitude& a : amps)
        a *= scale;
    return StateVector(n_qubits, std::move(amps));
}

inline double state_distance(const StateVector& a, const StateVector& b) {
    double sum = 0.0;
    for (std::uint64_t i = 0; i < a.dimension(); ++i)
        sum += std::norm(a[i] - b[i]);
    return std::sqrt(sum);
}

/// Dense 2^n x 2^n matrix of a gate given as a state transformer;
/// column k is the image of |k>.
inline std::vector<std::vector<Amplitude>> operator_matrix(
    int n_qubits, const std::function<StateVector(const StateVector&)>& gate) {
    const std::uint64_t dim = std::uint64_t(1) << n_qubits;
    std::vector<std::vector<Amplitude>> m(dim, std::vector<Amplitude>(dim));
    for (std::uint64_t k = 0; k < dim; ++k) {
        const StateVector img = gate(StateVector::basis_state(n_qubits, k));
        for (std::uint64_t r = 0; r < dim; ++r)
            m[r][k] = img[r];
    }
    return m;
}

/// Largest entrywise deviation of M M^dagger from the identity.
inline double unitarity_defect(const std::vector<std::vector<Amplitude>>& m) {
    const std::size_t dim = m.size();
    double worst = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Amplitude dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k)
                dot += m[r][k] * std::conj(m[c][k]);
            const Amplitude expect = (r == c) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot - expect));
        }
    }
    return worst;
}

}  // namespace qgj::testutil

#endif
