#include "qcevo/solution_matrix.hpp"

#include <cmath>
#include <sstream>

#include "qcevo/errors.hpp"

namespace qcevo {

SolutionMatrix::SolutionMatrix(int num_qubits) : SolutionMatrix(num_qubits, {identity_column(num_qubits)}) {}

SolutionMatrix::SolutionMatrix(int num_qubits, std::vector<Column> columns)
    : num_qubits_(num_qubits), columns_(std::move(columns)) {
    if (num_qubits_ < 1) throw ConfigError("SolutionMatrix needs at least one qubit");
}

Column identity_column(int num_qubits) { return Column(static_cast<std::size_t>(num_qubits), GateCell::id()); }

namespace {

GateCell single_from_basis(BasisGate gate, Rng& rng) {
    switch (gate) {
        case BasisGate::ID: return GateCell::id();
        case BasisGate::X: return GateCell::x();
        case BasisGate::SX: return GateCell::sx();
        case BasisGate::H: return GateCell::h();
        case BasisGate::RZ: {
            std::uniform_real_distribution<double> angle(0.0, kTwoPi);
            return GateCell::rz(angle(rng));
        }
        case BasisGate::CX: break;
    }
    throw InvariantViolation("CX is not a single-qubit gate");
}

}  // namespace

GateCell random_single_qubit_gate(const GateSet& gate_set, Rng& rng) {
    GateSet singles;
    for (BasisGate g : gate_set) {
        if (g != BasisGate::CX) singles.push_back(g);
    }
    if (singles.empty()) return GateCell::id();
    std::uniform_int_distribution<std::size_t> pick(0, singles.size() - 1);
    return single_from_basis(singles[pick(rng)], rng);
}

Column random_column(int num_qubits, const GateSet& gate_set, Rng& rng) {
    if (num_qubits < 1) throw ConfigError("random_column: num_qubits must be >= 1");
    if (gate_set.empty()) throw ConfigError("random_column: empty gate set");

    Column column(static_cast<std::size_t>(num_qubits));
    std::vector<bool> assigned(static_cast<std::size_t>(num_qubits), false);
    std::uniform_int_distribution<std::size_t> pick_gate(0, gate_set.size() - 1);
    std::bernoulli_distribution coin(0.5);

    for (int q = 0; q < num_qubits; ++q) {
        if (assigned[static_cast<std::size_t>(q)]) continue;
        const BasisGate gate = gate_set[pick_gate(rng)];
        if (gate == BasisGate::CX) {
            std::vector<int> free;
            for (int p = 0; p < num_qubits; ++p) {
                if (p != q && !assigned[static_cast<std::size_t>(p)]) free.push_back(p);
            }
            if (free.empty()) {
                column[static_cast<std::size_t>(q)] = random_single_qubit_gate(gate_set, rng);
            } else {
                std::uniform_int_distribution<std::size_t> pick_partner(0, free.size() - 1);
                const int p = free[pick_partner(rng)];
                const bool q_controls = coin(rng);
                const int control = q_controls ? q : p;
                const int target = q_controls ? p : q;
                column[static_cast<std::size_t>(control)] = GateCell::cx_control(target);
                column[static_cast<std::size_t>(target)] = GateCell::cx_target(control);
                assigned[static_cast<std::size_t>(p)] = true;
            }
        } else {
            column[static_cast<std::size_t>(q)] = single_from_basis(gate, rng);
        }
        assigned[static_cast<std::size_t>(q)] = true;
    }
    return column;
}

SolutionMatrix random_solution(int num_qubits, int depth_lo, int depth_hi, const GateSet& gate_set, Rng& rng) {
    if (depth_lo < 1 || depth_lo > depth_hi) {
        std::ostringstream msg;
        msg << "random_solution: invalid depth range [" << depth_lo << ", " << depth_hi << "]";
        throw ConfigError(msg.str());
    }
    std::uniform_int_distribution<int> pick_depth(depth_lo, depth_hi);
    const int depth = pick_depth(rng);
    std::vector<Column> columns;
    columns.reserve(static_cast<std::size_t>(depth));
    for (int c = 0; c < depth; ++c) columns.push_back(random_column(num_qubits, gate_set, rng));
    return SolutionMatrix(num_qubits, std::move(columns));
}

std::optional<std::string> validate_column(const Column& column, int num_qubits) {
    if (static_cast<int>(column.size()) != num_qubits) {
        std::ostringstream msg;
        msg << "ragged column: " << column.size() << " cells for " << num_qubits << " qubits";
        return msg.str();
    }
    for (int q = 0; q < num_qubits; ++q) {
        const GateCell& cell = column[static_cast<std::size_t>(q)];
        std::ostringstream msg;
        if (cell.kind() == GateKind::RZ) {
            if (!std::isfinite(cell.theta()) || cell.theta() < 0.0 || cell.theta() >= kTwoPi) {
                msg << "angle out of range on qubit " << q << ": " << cell.theta();
                return msg.str();
            }
        } else if (cell.theta() != 0.0) {
            msg << "angle on non-rotation gate at qubit " << q;
            return msg.str();
        }
        if (!cell.is_cx()) {
            if (cell.partner()) {
                msg << "partner on single-qubit gate at qubit " << q;
                return msg.str();
            }
            continue;
        }
        const auto partner = cell.partner();
        if (!partner || *partner < 0 || *partner >= num_qubits || *partner == q) {
            msg << "unpaired CX at qubit " << q;
            return msg.str();
        }
        const GateCell& other = column[static_cast<std::size_t>(*partner)];
        const GateKind expected =
            cell.kind() == GateKind::CX_CONTROL ? GateKind::CX_TARGET : GateKind::CX_CONTROL;
        if (other.kind() != expected || other.partner() != q) {
            msg << "unpaired CX at qubit " << q << " (partner " << *partner << " is "
                << to_string(other.kind()) << ")";
            return msg.str();
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate(const SolutionMatrix& matrix) {
    if (matrix.num_qubits() < 1) return "no qubits";
    if (matrix.depth() < 1) return "empty matrix (depth 0)";
    for (int c = 0; c < matrix.depth(); ++c) {
        if (auto err = validate_column(matrix.column(c), matrix.num_qubits())) {
            return "column " + std::to_string(c) + ": " + *err;
        }
    }
    return std::nullopt;
}

}  // namespace qcevo
