#include "qcevo/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qcevo/errors.hpp"

namespace qcevo {

namespace {

using Mat2 = std::array<Amplitude, 4>;  // row-major [[m0, m1], [m2, m3]]

Mat2 gate_matrix(const GateCell& cell) {
    using namespace std::complex_literals;
    constexpr double r = std::numbers::sqrt2 / 2.0;
    switch (cell.kind()) {
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::SX: return {0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i};
        case GateKind::H: return {r, r, r, -r};
        case GateKind::RZ: {
            const double half = cell.theta() / 2.0;
            return {std::polar(1.0, -half), 0.0, 0.0, std::polar(1.0, half)};
        }
        default: break;
    }
    throw InvariantViolation("no 2x2 matrix for " + std::string(to_string(cell.kind())));
}

std::size_t bit_of(int num_qubits, int qubit) {
    return std::size_t{1} << static_cast<unsigned>(num_qubits - 1 - qubit);
}

void apply_single(std::vector<Amplitude>& amps, std::size_t bit, const Mat2& m) {
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
        for (std::size_t i = base; i < base + bit; ++i) {
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i + bit];
            amps[i] = m[0] * a0 + m[1] * a1;
            amps[i + bit] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_diagonal(std::vector<Amplitude>& amps, std::size_t bit, Amplitude d0, Amplitude d1) {
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= (i & bit) ? d1 : d0;
}

void apply_cx(std::vector<Amplitude>& amps, std::size_t control_bit, std::size_t target_bit) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & control_bit) && !(i & target_bit)) std::swap(amps[i], amps[i | target_bit]);
    }
}

}  // namespace

Statevector::Statevector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1) throw ConfigError("Statevector needs at least one qubit");
    if (num_qubits_ > 30 || amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
        throw InvariantViolation("Statevector dimension does not match 2^n");
    }
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const Amplitude& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

Statevector zero_state(int num_qubits) {
    if (num_qubits < 1) throw ConfigError("zero_state: num_qubits must be >= 1");
    if (num_qubits > 30) throw ConfigError("zero_state: too many qubits for a dense statevector");
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps[0] = 1.0;
    return Statevector(num_qubits, std::move(amps));
}

void apply_column(Statevector& state, const Column& column) {
    const int n = state.num_qubits();
    if (auto err = validate_column(column, n)) throw InvariantViolation("apply_column: " + *err);
    auto& amps = state.amplitudes();
    for (int q = 0; q < n; ++q) {
        const GateCell& cell = column[static_cast<std::size_t>(q)];
        switch (cell.kind()) {
            case GateKind::ID:
            case GateKind::CX_TARGET:  // applied with its control
                break;
            case GateKind::CX_CONTROL:
                apply_cx(amps, bit_of(n, q), bit_of(n, *cell.partner()));
                break;
            case GateKind::RZ: {
                const double half = cell.theta() / 2.0;
                apply_diagonal(amps, bit_of(n, q), std::polar(1.0, -half), std::polar(1.0, half));
                break;
            }
            default:
                apply_single(amps, bit_of(n, q), gate_matrix(cell));
                break;
        }
    }
}

Statevector simulate_from(const SolutionMatrix& matrix, Statevector state) {
    if (state.num_qubits() != matrix.num_qubits()) throw InvariantViolation("simulate: qubit count mismatch");
    for (const Column& column : matrix.columns()) apply_column(state, column);
    return state;
}

Statevector simulate(const SolutionMatrix& matrix) { return simulate_from(matrix, zero_state(matrix.num_qubits())); }

double fidelity(const Statevector& a, const Statevector& b) {
    if (a.num_qubits() != b.num_qubits()) throw InvariantViolation("fidelity: dimension mismatch");
    // Expanded by hand so that <a|a> has an exactly zero imaginary part.
    double re = 0.0;
    double im = 0.0;
    double aa = 0.0;
    double bb = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
        aa += ar * ar + ai * ai;
        bb += br * br + bi * bi;
    }
    if (aa == 0.0 || bb == 0.0) return 0.0;
    const double overlap = std::hypot(re, im) / std::sqrt(aa * bb);
    return std::clamp(overlap, 0.0, 1.0);
}

}  // namespace qcevo
