#pragma once

#include <complex>
#include <vector>

#include "qcevo/solution_matrix.hpp"

namespace qcevo {

using Amplitude = std::complex<double>;

/// Dense pure state of `num_qubits` qubits. Qubit 0 is the most significant
/// bit of the basis index, so |q0 q1 ... q(n-1)> reads left to right.
class Statevector {
public:
    Statevector(int num_qubits, std::vector<Amplitude> amplitudes);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }

    const std::vector<Amplitude>& amplitudes() const noexcept { return amplitudes_; }
    std::vector<Amplitude>& amplitudes() noexcept { return amplitudes_; }
    const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;

    friend bool operator==(const Statevector&, const Statevector&) = default;

private:
    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// |0...0>.
Statevector zero_state(int num_qubits);

/// Applies every gate of one column in place. Throws InvariantViolation on a
/// malformed column.
void apply_column(Statevector& state, const Column& column);

/// zero_state folded through the columns left to right.
Statevector simulate(const SolutionMatrix& matrix);

/// Applies the columns to an arbitrary starting state.
Statevector simulate_from(const SolutionMatrix& matrix, Statevector state);

/// |<a|b>| for pure states, normalized by both norms and clamped to [0, 1].
double fidelity(const Statevector& a, const Statevector& b);

}  // namespace qcevo
