#include "qgj/state_vector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qgj {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_wire(const StateVector& s, int wire, const char* who) {
    if (wire < 0 || wire >= s.n_qubits())
        throw std::out_of_range(std::string(who) + ": wire out of range");
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 1)
        throw std::invalid_argument("StateVector: need at least one qubit");
    if (amps_.size() != (std::uint64_t(1) << n_qubits))
        throw std::invalid_argument("StateVector: amplitude count must be 2^n");
    for (const Amplitude& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("StateVector: non-finite amplitude");
    }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    if (n_qubits < 1)
        throw std::invalid_argument("basis_state: need at least one qubit");
    if (index >= (std::uint64_t(1) << n_qubits))
        throw std::out_of_range("basis_state: index out of range");
    std::vector<Amplitude> amps(std::uint64_t(1) << n_qubits);
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const Amplitude& a : amps_)
        s += std::norm(a);
    return s;
}

bool GateMatrix1Q::is_unitary(double tol) const {
    // rows of U U^dagger against the identity
    const Amplitude r00 = u00 * std::conj(u00) + u01 * std::conj(u01);
    const Amplitude r01 = u00 * std::conj(u10) + u01 * std::conj(u11);
    const Amplitude r11 = u10 * std::conj(u10) + u11 * std::conj(u11);
    return std::abs(r00 - 1.0) <= tol && std::abs(r01) <= tol && std::abs(r11 - 1.0) <= tol;
}

StateVector apply_hadamard(const StateVector& s, int wire) {
    check_wire(s, wire, "apply_hadamard");
    const std::uint64_t bit = std::uint64_t(1) << wire;
    std::vector<Amplitude> out = s.amplitudes();
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        if (i & bit)
            continue;
        const Amplitude a0 = out[i];
        const Amplitude a1 = out[i | bit];
        out[i] = (a0 + a1) * kInvSqrt2;
        out[i | bit] = (a0 - a1) * kInvSqrt2;
    }
    return StateVector(s.n_qubits(), std::move(out));
}

StateVector apply_phase(const StateVector& s, int wire, double phi) {
    check_wire(s, wire, "apply_phase");
    if (!std::isfinite(phi))
        throw std::invalid_argument("apply_phase: non-finite angle");
    const std::uint64_t bit = std::uint64_t(1) << wire;
    const Amplitude factor = std::polar(1.0, phi);
    std::vector<Amplitude> out = s.amplitudes();
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        if (i & bit)
            out[i] *= factor;
    }
    return StateVector(s.n_qubits(), std::move(out));
}

StateVector apply_cnot(const StateVector& s, int control, int target) {
    check_wire(s, control, "apply_cnot");
    check_wire(s, target, "apply_cnot");
    if (control == target)
        throw std::invalid_argument("apply_cnot: control equals target");
    const std::uint64_t cbit = std::uint64_t(1) << control;
    const std::uint64_t tbit = std::uint64_t(1) << target;
    std::vector<Amplitude> out = s.amplitudes();
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        if ((i & cbit) && !(i & tbit))
            std::swap(out[i], out[i | tbit]);
    }
    return StateVector(s.n_qubits(), std::move(out));
}

StateVector apply_controlled_unitary(const StateVector& s, int control, int target,
                                     const GateMatrix1Q& u) {
    check_wire(s, control, "apply_controlled_unitary");
    check_wire(s, target, "apply_controlled_unitary");
    if (control == target)
        throw std::invalid_argument("apply_controlled_unitary: control equals target");
    if (!u.is_unitary())
        throw std::invalid_argument("apply_controlled_unitary: matrix is not unitary");
    const std::uint64_t cbit = std::uint64_t(1) << control;
    const std::uint64_t tbit = std::uint64_t(1) << target;
    std::vector<Amplitude> out = s.amplitudes();
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        if (!(i & cbit) || (i & tbit))
            continue;
        const Amplitude a0 = out[i];
        const Amplitude a1 = out[i | tbit];
        out[i] = u.u00 * a0 + u.u01 * a1;
        out[i | tbit] = u.u10 * a0 + u.u11 * a1;
    }
    return StateVector(s.n_qubits(), std::move(out));
}

std::vector<double> probabilities(const StateVector& s) {
    std::vector<double> p;
    p.reserve(s.dimension());
    for (const Amplitude& a : s.amplitudes())
        p.push_back(std::norm(a));
    return p;
}

MeasurementOutcome measure(const StateVector& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = unit(rng);
    double cumulative = 0.0;
    const auto& amps = s.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        cumulative += p;
        if (r < cumulative)
            return {i, p};
    }
    // guard against rounding shortfall at the top of the CDF
    const std::uint64_t last = amps.size() - 1;
    return {last, std::norm(amps[last])};
}

}  // namespace qgj
