#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgj/qft_arith.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>

using namespace qgj;
using namespace qgj::testutil;

TEST_CASE("base-q digits round trip") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint64_t> value(0, 1u << 20);
    for (unsigned q : {2u, 3u, 7u, 10u}) {
        for (int trial = 0; trial < 50; ++trial) {
            const std::uint64_t v = value(rng);
            CHECK(digits_value(digitize(v, q)) == v);
        }
    }
    CHECK_THROWS_AS(digitize(5, 1), std::invalid_argument);
}

TEST_CASE("classical addition") {
    // decimal carry 7 + 5 = 12
    const BaseQDigits sum10 = classical_add_base_q(digitize(7, 10), digitize(5, 10));
    CHECK(sum10.digits == std::vector<unsigned>{2, 1});

    // binary carry 1 + 1 = 10
    const BaseQDigits sum2 = classical_add_base_q(digitize(1, 2), digitize(1, 2));
    CHECK(sum2.digits == std::vector<unsigned>{0, 1});

    // base 3: 8 + 8 = 16 = 121_3
    const BaseQDigits sum3 = classical_add_base_q(digitize(8, 3), digitize(8, 3));
    CHECK(sum3.digits == std::vector<unsigned>{1, 2, 1});

    CHECK_THROWS_AS(classical_add_base_q(digitize(1, 2), digitize(1, 3)),
                    std::invalid_argument);
}

TEST_CASE("classical multiplication") {
    CHECK(digits_value(classical_mul_base_q(digitize(123, 10), digitize(0, 10))) == 0);
    CHECK(classical_mul_base_q(digitize(3, 10), digitize(4, 10)).digits ==
          std::vector<unsigned>{2, 1});
    CHECK(classical_mul_base_q(digitize(5, 2), digitize(6, 2)).digits ==
          std::vector<unsigned>{0, 1, 1, 1, 1});
    CHECK_THROWS_AS(classical_mul_base_q(digitize(1, 2), digitize(1, 5)),
                    std::invalid_argument);
}

TEST_CASE("addition and multiplication agree with integer oracles") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::uint64_t> value(0, 5000);
    for (unsigned q : {2u, 3u, 5u, 16u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint64_t a = value(rng), b = value(rng);
            CHECK(digits_value(classical_add_base_q(digitize(a, q), digitize(b, q))) == a + b);
            CHECK(digits_value(classical_mul_base_q(digitize(a, q), digitize(b, q))) == a * b);
        }
    }
}

TEST_CASE("characters") {
    SUBCASE("trivial character") {
        const CharacterParams zero{{0, 0, 0}, 3};
        std::vector<long long> x{1, 2, 0};
        CHECK(std::abs(character(zero, x) - std::complex<double>(1.0)) < 1e-12);
    }
    SUBCASE("sign character") {
        const CharacterParams sign{{1}, 2};
        std::vector<long long> x{1};
        CHECK(std::abs(character(sign, x) - std::complex<double>(-1.0)) < 1e-12);
    }
    SUBCASE("homomorphism over random triples") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<long long> comp(-50, 50);
        std::uniform_int_distribution<int> len(1, 4);
        for (unsigned q : {2u, 3u, 5u}) {
            for (int trial = 0; trial < 200; ++trial) {
                const int n = len(rng);
                CharacterParams params{{}, q};
                std::vector<long long> x, y, xy;
                for (int i = 0; i < n; ++i) {
                    params.a.push_back(comp(rng));
                    x.push_back(comp(rng));
                    y.push_back(comp(rng));
                    xy.push_back(x.back() + y.back());
                }
                const auto lhs = character(params, xy);
                const auto rhs = character(params, x) * character(params, y);
                CHECK(std::abs(lhs - rhs) < 1e-10);
                CHECK(std::abs(std::abs(lhs) - 1.0) < 1e-12);
            }
        }
    }
    SUBCASE("length mismatch") {
        std::vector<long long> x{1, 2};
        CHECK_THROWS_AS(character(CharacterParams{{1}, 2}, x), std::invalid_argument);
    }
}

TEST_CASE("qft equals Hadamard for one qubit") {
    for (int x = 0; x < 2; ++x) {
        const StateVector s = StateVector::basis_state(1, x);
        CHECK(state_distance(qft(s), apply_hadamard(s, 0)) < 1e-12);
    }
}

TEST_CASE("qft matrix matches the direct DFT sum") {
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t dim = std::uint64_t(1) << n;
        const double scale = 1.0 / std::sqrt(double(dim));
        auto m = operator_matrix(n, [](const StateVector& s) { return qft(s); });
        for (std::uint64_t y = 0; y < dim; ++y) {
            for (std::uint64_t k = 0; k < dim; ++k) {
                const auto expect =
                    std::polar(scale, 2.0 * std::numbers::pi * double(y * k) / double(dim));
                CHECK(std::abs(m[k][y] - expect) < 1e-10);
            }
        }
        CHECK(unitarity_defect(m) < 1e-10);
    }
}

TEST_CASE("qft of a basis state has flat modulus") {
    const StateVector s = qft(StateVector::basis_state(4, 9));
    for (const Amplitude& a : s.amplitudes())
        CHECK(std::abs(std::abs(a) - 0.25) < 1e-12);
}

TEST_CASE("iqft inverts qft") {
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const StateVector s = random_state(rng, n);
            CHECK(state_distance(iqft(qft(s)), s) < 1e-9);
        }
    }
    const StateVector five = StateVector::basis_state(3, 5);
    CHECK(state_distance(iqft(qft(five)), five) < 1e-9);
}

TEST_CASE("iqft is the adjoint of qft as a matrix") {
    const int n = 2;
    auto f = operator_matrix(n, [](const StateVector& s) { return qft(s); });
    auto inv = operator_matrix(n, [](const StateVector& s) { return iqft(s); });
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(std::abs(inv[r][c] - std::conj(f[c][r])) < 1e-10);
}

TEST_CASE("phase_add") {
    SUBCASE("zero operand is the identity") {
        std::mt19937_64 rng(31);
        const StateVector s = random_state(rng, 3);
        CHECK(state_distance(phase_add(s, 0), s) < 1e-15);
    }
    SUBCASE("matches qft of the classical sum, all n=4 pairs") {
        for (std::uint64_t a = 0; a < 16; ++a) {
            const StateVector fa = qft(StateVector::basis_state(4, a));
            for (std::uint64_t b = 0; b < 16; ++b) {
                const StateVector expect = qft(StateVector::basis_state(4, (a + b) % 16));
                CHECK(state_distance(phase_add(fa, b), expect) < 1e-9);
            }
        }
    }
    SUBCASE("diagonal: probabilities untouched") {
        std::mt19937_64 rng(37);
        const StateVector s = random_state(rng, 4);
        const auto before = probabilities(s);
        const auto after = probabilities(phase_add(s, 11));
        for (std::size_t i = 0; i < before.size(); ++i)
            CHECK(after[i] == doctest::Approx(before[i]).epsilon(1e-12));
    }
    SUBCASE("operand range") {
        const StateVector s = StateVector::basis_state(2, 0);
        CHECK_THROWS_AS(phase_add(s, 4), std::out_of_range);
    }
}

TEST_CASE("quantum_add") {
    CHECK(quantum_add(3, 5, 4) == 8);
    CHECK(quantum_add(15, 1, 4) == 0);  // wraps mod 16
    for (std::uint64_t a = 0; a < 8; ++a)
        CHECK(quantum_add(a, 0, 3) == a);
    CHECK_THROWS_AS(quantum_add(16, 0, 4), std::out_of_range);
}
