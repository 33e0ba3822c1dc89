#include "qcevo/compactor.hpp"

#include <algorithm>

namespace qcevo {

SolutionMatrix merge_rotations(const SolutionMatrix& matrix) {
    SolutionMatrix out = matrix;
    for (int q = 0; q < out.num_qubits(); ++q) {
        for (int c = 0; c + 1 < out.depth(); ++c) {
            GateCell& first = out.cell(q, c);
            GateCell& second = out.cell(q, c + 1);
            if (first.kind() == GateKind::RZ && second.kind() == GateKind::RZ) {
                first.set_theta(first.theta() + second.theta());
                second = GateCell::id();
            }
        }
    }
    return out;
}

namespace {

bool move_cell_left(SolutionMatrix& m, int q, int from, int to) {
    if (from == to) return false;
    m.cell(q, to) = m.cell(q, from);
    m.cell(q, from) = GateCell::id();
    return true;
}

}  // namespace

SolutionMatrix shift_gates_left(const SolutionMatrix& matrix) {
    SolutionMatrix out = matrix;
    const int n = out.num_qubits();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 1; c < out.depth(); ++c) {
            for (int q = 0; q < n; ++q) {
                const GateCell cell = out.cell(q, c);
                if (cell.is_identity() || cell.kind() == GateKind::CX_TARGET) continue;
                if (cell.kind() == GateKind::CX_CONTROL) {
                    const int t = *cell.partner();
                    int to = c;
                    while (to > 0 && out.cell(q, to - 1).is_identity() && out.cell(t, to - 1).is_identity()) --to;
                    if (to != c) {
                        move_cell_left(out, q, c, to);
                        move_cell_left(out, t, c, to);
                        changed = true;
                    }
                } else {
                    int to = c;
                    while (to > 0 && out.cell(q, to - 1).is_identity()) --to;
                    changed |= move_cell_left(out, q, c, to);
                }
            }
        }
    }
    return out;
}

SolutionMatrix drop_identity_columns(const SolutionMatrix& matrix) {
    std::vector<Column> kept;
    kept.reserve(matrix.columns().size());
    for (const Column& column : matrix.columns()) {
        const bool all_id = std::all_of(column.begin(), column.end(), [](const GateCell& g) { return g.is_identity(); });
        if (!all_id) kept.push_back(column);
    }
    if (kept.empty()) kept.push_back(identity_column(matrix.num_qubits()));
    return SolutionMatrix(matrix.num_qubits(), std::move(kept));
}

SolutionMatrix compact(const SolutionMatrix& matrix) {
    SolutionMatrix current = matrix;
    while (true) {
        SolutionMatrix next = drop_identity_columns(shift_gates_left(merge_rotations(current)));
        if (next == current) return next;
        current = std::move(next);
    }
}

}  // namespace qcevo
