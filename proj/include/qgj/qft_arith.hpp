#ifndef QGJ_QFT_ARITH_HPP
#define QGJ_QFT_ARITH_HPP

#include "qgj/state_vector.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qgj {

/// Little-endian positional digits in base q >= 2.
struct BaseQDigits {
    unsigned q;
    std::vector<unsigned> digits;  // each in [0, q)
};

BaseQDigits digitize(std::uint64_t value, unsigned q);
std::uint64_t digits_value(const BaseQDigits& d);

// Classical reference arithmetic with carry propagation.
BaseQDigits classical_add_base_q(const BaseQDigits& a, const BaseQDigits& b);
BaseQDigits classical_mul_base_q(const BaseQDigits& a, const BaseQDigits& b);

/// Parameters of a unitary character of the additive group (Z/q)^n:
/// x -> exp(2*pi*i * sum(a_i x_i) / q^n).
struct CharacterParams {
    std::vector<long long> a;
    unsigned q;
};

std::complex<double> character(const CharacterParams& params, std::span<const long long> x);

/// Fourier transform of the register: output amplitude at k is
/// (1 / sqrt(2^n)) * sum_y v_y e^{2 pi i y k / 2^n}. Built from Hadamard and
/// controlled-phase gates, O(n^2) applications.
StateVector qft(const StateVector& s);
StateVector iqft(const StateVector& s);

/// Adds the classical constant b in the Fourier basis by per-wire phase
/// rotations; a diagonal operator, so probabilities are untouched.
StateVector phase_add(const StateVector& s, std::uint64_t b);

/// qft -> phase rotations -> iqft. The final state is a basis state, so the
/// readout is deterministic: (a + b) mod 2^n.
std::uint64_t quantum_add(std::uint64_t a, std::uint64_t b, int n_qubits);

}  // namespace qgj

#endif
