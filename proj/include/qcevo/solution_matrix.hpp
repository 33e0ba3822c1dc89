#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcevo/gate.hpp"

namespace qcevo {

using Rng = std::mt19937_64;

/// One time step: exactly one cell per qubit.
using Column = std::vector<GateCell>;

/// Circuit genome. Rows are qubits, columns are time steps; stored as a list
/// of columns so column-level operators address whole time steps.
class SolutionMatrix {
public:
    /// A single all-ID column.
    explicit SolutionMatrix(int num_qubits);
    SolutionMatrix(int num_qubits, std::vector<Column> columns);

    int num_qubits() const noexcept { return num_qubits_; }
    int depth() const noexcept { return static_cast<int>(columns_.size()); }

    const std::vector<Column>& columns() const noexcept { return columns_; }
    std::vector<Column>& columns() noexcept { return columns_; }

    const Column& column(int c) const { return columns_.at(static_cast<std::size_t>(c)); }
    Column& column(int c) { return columns_.at(static_cast<std::size_t>(c)); }

    const GateCell& cell(int qubit, int c) const { return column(c).at(static_cast<std::size_t>(qubit)); }
    GateCell& cell(int qubit, int c) { return column(c).at(static_cast<std::size_t>(qubit)); }

    friend bool operator==(const SolutionMatrix&, const SolutionMatrix&) = default;

private:
    int num_qubits_;
    std::vector<Column> columns_;
};

/// Column of `num_qubits` identity cells.
Column identity_column(int num_qubits);

/// Draws one valid column. Qubits are filled in index order; a CX draw pairs
/// the qubit with a uniformly chosen unassigned qubit (roles random) or falls
/// back to a random single-qubit gate when none is free.
Column random_column(int num_qubits, const GateSet& gate_set, Rng& rng);

/// Depth uniform on [lo, hi], every column from random_column.
SolutionMatrix random_solution(int num_qubits, int depth_lo, int depth_hi, const GateSet& gate_set, Rng& rng);

/// A uniformly drawn single-qubit gate from `gate_set` (CX excluded). Falls
/// back to ID if the set has no single-qubit entry.
GateCell random_single_qubit_gate(const GateSet& gate_set, Rng& rng);

/// Empty optional when valid, otherwise a description of the first violation.
std::optional<std::string> validate(const SolutionMatrix& matrix);

/// Column-level check used by the simulator and by validate().
std::optional<std::string> validate_column(const Column& column, int num_qubits);

inline SolutionMatrix clone_solution(const SolutionMatrix& matrix) { return matrix; }

}  // namespace qcevo
