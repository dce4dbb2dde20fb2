#include "qgj/qft_arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgj {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_digits(const BaseQDigits& d, const char* who) {
    if (d.q < 2)
        throw std::invalid_argument(std::string(who) + ": base must be >= 2");
    for (unsigned digit : d.digits) {
        if (digit >= d.q)
            throw std::invalid_argument(std::string(who) + ": digit out of range");
    }
}

void trim(BaseQDigits& d) {
    while (d.digits.size() > 1 && d.digits.back() == 0)
        d.digits.pop_back();
}

// swap two wires with three CNOTs
StateVector swap_wires(const StateVector& s, int a, int b) {
    StateVector t = apply_cnot(s, a, b);
    t = apply_cnot(t, b, a);
    return apply_cnot(t, a, b);
}

StateVector fourier_circuit(const StateVector& s, bool inverse) {
    const int n = s.n_qubits();
    StateVector t = s;
    const double sign = inverse ? -1.0 : 1.0;
    if (!inverse) {
        for (int j = n - 1; j >= 0; --j) {
            t = apply_hadamard(t, j);
            for (int k = j - 1; k >= 0; --k)
                t = apply_controlled_unitary(t, k, j,
                                             GateMatrix1Q::phase(sign * kTwoPi / double(std::uint64_t(1) << (j - k + 1))));
        }
        for (int i = 0; i < n / 2; ++i)
            t = swap_wires(t, i, n - 1 - i);
    } else {
        for (int i = 0; i < n / 2; ++i)
            t = swap_wires(t, i, n - 1 - i);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k)
                t = apply_controlled_unitary(t, k, j,
                                             GateMatrix1Q::phase(sign * kTwoPi / double(std::uint64_t(1) << (j - k + 1))));
            t = apply_hadamard(t, j);
        }
    }
    return t;
}

}  // namespace

BaseQDigits digitize(std::uint64_t value, unsigned q) {
    if (q < 2)
        throw std::invalid_argument("digitize: base must be >= 2");
    BaseQDigits d{q, {}};
    do {
        d.digits.push_back(unsigned(value % q));
        value /= q;
    } while (value != 0);
    return d;
}

std::uint64_t digits_value(const BaseQDigits& d) {
    check_digits(d, "digits_value");
    std::uint64_t value = 0;
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it)
        value = value * d.q + *it;
    return value;
}

BaseQDigits classical_add_base_q(const BaseQDigits& a, const BaseQDigits& b) {
    check_digits(a, "classical_add_base_q");
    check_digits(b, "classical_add_base_q");
    if (a.q != b.q)
        throw std::invalid_argument("classical_add_base_q: base mismatch");
    BaseQDigits out{a.q, {}};
    unsigned carry = 0;
    const std::size_t len = std::max(a.digits.size(), b.digits.size());
    for (std::size_t i = 0; i < len || carry; ++i) {
        unsigned sum = carry;
        if (i < a.digits.size()) sum += a.digits[i];
        if (i < b.digits.size()) sum += b.digits[i];
        out.digits.push_back(sum % a.q);
        carry = sum / a.q;
    }
    if (out.digits.empty())
        out.digits.push_back(0);
    trim(out);
    return out;
}

BaseQDigits classical_mul_base_q(const BaseQDigits& a, const BaseQDigits& b) {
    check_digits(a, "classical_mul_base_q");
    check_digits(b, "classical_mul_base_q");
    if (a.q != b.q)
        throw std::invalid_argument("classical_mul_base_q: base mismatch");
    // schoolbook product including the cross terms
    std::vector<std::uint64_t> acc(a.digits.size() + b.digits.size(), 0);
    for (std::size_t i = 0; i < a.digits.size(); ++i)
        for (std::size_t j = 0; j < b.digits.size(); ++j)
            acc[i + j] += std::uint64_t(a.digits[i]) * b.digits[j];
    BaseQDigits out{a.q, {}};
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < acc.size() || carry; ++i) {
        std::uint64_t sum = carry + (i < acc.size() ? acc[i] : 0);
        out.digits.push_back(unsigned(sum % a.q));
        carry = sum / a.q;
    }
    trim(out);
    return out;
}

std::complex<double> character(const CharacterParams& params, std::span<const long long> x) {
    if (params.q < 2)
        throw std::invalid_argument("character: base must be >= 2");
    if (params.a.size() != x.size())
        throw std::invalid_argument("character: component length mismatch");
    long long modulus = 1;
    for (std::size_t i = 0; i < params.a.size(); ++i)
        modulus *= params.q;
    auto reduce = [modulus](long long v) {
        long long r = v % modulus;
        return r < 0 ? r + modulus : r;
    };
    long long sum = 0;
    for (std::size_t i = 0; i < params.a.size(); ++i)
        sum = reduce(sum + reduce(params.a[i]) * reduce(x[i]));
    return std::polar(1.0, kTwoPi * double(sum) / double(modulus));
}

StateVector qft(const StateVector& s) { return fourier_circuit(s, false); }

StateVector iqft(const StateVector& s) { return fourier_circuit(s, true); }

StateVector phase_add(const StateVector& s, std::uint64_t b) {
    const std::uint64_t dim = s.dimension();
    if (b >= dim)
        throw std::out_of_range("phase_add: operand out of range");
    StateVector t = s;
    for (int j = 0; j < s.n_qubits(); ++j) {
        // e^{2 pi i b 2^j / 2^n} on every index with bit j set
        const std::uint64_t shifted = (b << j) % dim;
        if (shifted != 0)
            t = apply_phase(t, j, kTwoPi * double(shifted) / double(dim));
    }
    return t;
}

std::uint64_t quantum_add(std::uint64_t a, std::uint64_t b, int n_qubits) {
    if (n_qubits < 1)
        throw std::invalid_argument("quantum_add: need at least one qubit");
    const std::uint64_t dim = std::uint64_t(1) << n_qubits;
    if (a >= dim || b >= dim)
        throw std::out_of_range("quantum_add: operand out of range");
    const StateVector sum = iqft(phase_add(qft(StateVector::basis_state(n_qubits, a)), b));
    // the result is a basis state; read out the certain outcome
    std::uint64_t best = 0;
    double best_p = -1.0;
    const auto probs = probabilities(sum);
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (probs[i] > best_p) {
            best_p = probs[i];
            best = i;
        }
    }
    return best;
}

}  // namespace qgj
