#ifndef QGJ_STATE_VECTOR_HPP
#define QGJ_STATE_VECTOR_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qgj {

using Amplitude = std::complex<double>;

/// Dense amplitude vector of an n-qubit register. Wire 0 is the least
/// significant bit of the basis index. Values are immutable after
/// construction; gates return new states.
class StateVector {
public:
    static StateVector basis_state(int n_qubits, std::uint64_t index);

    StateVector(int n_qubits, std::vector<Amplitude> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dimension() const { return std::uint64_t(1) << n_qubits_; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }

    double norm_squared() const;

private:
    int n_qubits_;
    std::vector<Amplitude> amps_;
};

struct GateMatrix1Q {
    Amplitude u00, u01, u10, u11;

    bool is_unitary(double tol = 1e-10) const;

    static GateMatrix1Q identity() { return {1, 0, 0, 1}; }
    static GateMatrix1Q pauli_x() { return {0, 1, 1, 0}; }
    static GateMatrix1Q phase(double phi) {
        return {1, 0, 0, std::polar(1.0, phi)};
    }
};

struct MeasurementOutcome {
    std::uint64_t basis_index;
    double probability;  // Born probability of the observed index
};

StateVector apply_hadamard(const StateVector& s, int wire);
StateVector apply_phase(const StateVector& s, int wire, double phi);
StateVector apply_cnot(const StateVector& s, int control, int target);
StateVector apply_controlled_unitary(const StateVector& s, int control, int target,
                                     const GateMatrix1Q& u);

std::vector<double> probabilities(const StateVector& s);
MeasurementOutcome measure(const StateVector& s, std::mt19937_64& rng);

}  // namespace qgj

#endif
