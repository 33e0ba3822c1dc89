#include "qcevo/operators.hpp"

#include <algorithm>
#include <utility>

#include "qcevo/errors.hpp"

namespace qcevo {

namespace {

const SolutionMatrix& pick(const SolutionMatrix& p1, const SolutionMatrix& p2, Parent which) {
    return which == Parent::First ? p1 : p2;
}

void require_same_width(const SolutionMatrix& p1, const SolutionMatrix& p2) {
    if (p1.num_qubits() != p2.num_qubits()) throw InvariantViolation("crossover parents differ in qubit count");
}

Parent coin_parent(Rng& rng) {
    std::bernoulli_distribution coin(0.5);
    return coin(rng) ? Parent::First : Parent::Second;
}

int uniform_index(Rng& rng, int size) {
    std::uniform_int_distribution<int> dist(0, size - 1);
    return dist(rng);
}

}  // namespace

SolutionMatrix single_point_crossover(const SolutionMatrix& p1, const SolutionMatrix& p2, Parent depth_from,
                                      int cut) {
    require_same_width(p1, p2);
    const int shortest = std::min(p1.depth(), p2.depth());
    const int depth = pick(p1, p2, depth_from).depth();
    if (shortest < 2) return pick(p1, p2, depth_from);
    if (cut < 1 || cut > shortest - 1) throw ConfigError("single_point_crossover: cut outside [1, min_depth - 1]");

    const SolutionMatrix* head = &p1;
    const SolutionMatrix* tail = &p2;
    if (depth > shortest) {
        head = p1.depth() == shortest ? &p1 : &p2;
        tail = head == &p1 ? &p2 : &p1;
    }
    std::vector<Column> columns;
    columns.reserve(static_cast<std::size_t>(depth));
    for (int c = 0; c < depth; ++c) columns.push_back(c < cut ? head->column(c) : tail->column(c));
    return SolutionMatrix(p1.num_qubits(), std::move(columns));
}

SolutionMatrix single_point_crossover(const SolutionMatrix& p1, const SolutionMatrix& p2, Rng& rng) {
    const Parent depth_from = coin_parent(rng);
    const int shortest = std::min(p1.depth(), p2.depth());
    if (shortest < 2) return single_point_crossover(p1, p2, depth_from, 0);
    std::uniform_int_distribution<int> cut(1, shortest - 1);
    return single_point_crossover(p1, p2, depth_from, cut(rng));
}

SolutionMatrix uniform_column_crossover(const SolutionMatrix& p1, const SolutionMatrix& p2, Parent depth_from,
                                        std::span<const Parent> picks) {
    require_same_width(p1, p2);
    const int shortest = std::min(p1.depth(), p2.depth());
    const int depth = pick(p1, p2, depth_from).depth();
    const SolutionMatrix& longer = p1.depth() >= p2.depth() ? p1 : p2;
    const int shared = std::min(depth, shortest);
    if (static_cast<int>(picks.size()) < shared) throw ConfigError("uniform_column_crossover: too few column picks");

    std::vector<Column> columns;
    columns.reserve(static_cast<std::size_t>(depth));
    for (int c = 0; c < depth; ++c) {
        const SolutionMatrix& source = c < shortest ? pick(p1, p2, picks[static_cast<std::size_t>(c)]) : longer;
        columns.push_back(source.column(c));
    }
    return SolutionMatrix(p1.num_qubits(), std::move(columns));
}

SolutionMatrix uniform_column_crossover(const SolutionMatrix& p1, const SolutionMatrix& p2, Rng& rng) {
    const Parent depth_from = coin_parent(rng);
    const int shared = std::min(pick(p1, p2, depth_from).depth(), std::min(p1.depth(), p2.depth()));
    std::vector<Parent> picks;
    picks.reserve(static_cast<std::size_t>(shared));
    for (int c = 0; c < shared; ++c) picks.push_back(coin_parent(rng));
    return uniform_column_crossover(p1, p2, depth_from, picks);
}

std::string_view to_string(MutationKind kind) noexcept {
    switch (kind) {
        case MutationKind::MutateGate: return "MutateGate";
        case MutationKind::GateSwap: return "GateSwap";
        case MutationKind::ColumnSwap: return "ColumnSwap";
        case MutationKind::SwapCtrlTarg: return "SwapCtrlTarg";
        case MutationKind::AddRandomColumn: return "AddRandomColumn";
        case MutationKind::DeleteColumn: return "DeleteColumn";
        case MutationKind::AddCX: return "AddCX";
        case MutationKind::AddSingleGate: return "AddSingleGate";
    }
    return "?";
}

MutationKind draw_mutation_kind(const std::array<double, kMutationKindCount>& weights, Rng& rng) {
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    return kAllMutationKinds[dist(rng)];
}

namespace {

void insert_column(SolutionMatrix& m, Column column, Rng& rng) {
    std::uniform_int_distribution<int> pos(0, m.depth());
    auto& cols = m.columns();
    cols.insert(cols.begin() + pos(rng), std::move(column));
}

void mutate_gate(SolutionMatrix& m, const GateSet& gates, Rng& rng) {
    const int q = uniform_index(rng, m.num_qubits());
    const int c = uniform_index(rng, m.depth());
    GateCell& cell = m.cell(q, c);
    if (cell.is_cx()) {
        const int partner = *cell.partner();
        m.cell(q, c) = random_single_qubit_gate(gates, rng);
        m.cell(partner, c) = random_single_qubit_gate(gates, rng);
    } else {
        cell = random_single_qubit_gate(gates, rng);
    }
}

void gate_swap(SolutionMatrix& m, Rng& rng) {
    std::vector<int> eligible;
    for (int c = 0; c < m.depth(); ++c) {
        const auto& col = m.column(c);
        if (std::count_if(col.begin(), col.end(), [](const GateCell& g) { return g.is_single_qubit(); }) >= 2) {
            eligible.push_back(c);
        }
    }
    if (eligible.empty()) return;
    const int c = eligible[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(eligible.size())))];
    std::vector<int> singles;
    for (int q = 0; q < m.num_qubits(); ++q) {
        if (m.cell(q, c).is_single_qubit()) singles.push_back(q);
    }
    const int a = uniform_index(rng, static_cast<int>(singles.size()));
    int b = uniform_index(rng, static_cast<int>(singles.size()) - 1);
    if (b >= a) ++b;
    std::swap(m.cell(singles[static_cast<std::size_t>(a)], c), m.cell(singles[static_cast<std::size_t>(b)], c));
}

void column_swap(SolutionMatrix& m, Rng& rng) {
    if (m.depth() < 2) return;
    const int a = uniform_index(rng, m.depth());
    int b = uniform_index(rng, m.depth() - 1);
    if (b >= a) ++b;
    std::swap(m.columns()[static_cast<std::size_t>(a)], m.columns()[static_cast<std::size_t>(b)]);
}

void swap_ctrl_targ(SolutionMatrix& m, Rng& rng) {
    std::vector<std::pair<int, int>> controls;  // (qubit, column)
    for (int c = 0; c < m.depth(); ++c) {
        for (int q = 0; q < m.num_qubits(); ++q) {
            if (m.cell(q, c).kind() == GateKind::CX_CONTROL) controls.emplace_back(q, c);
        }
    }
    if (controls.empty()) return;
    const auto [q, c] = controls[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(controls.size())))];
    const int t = *m.cell(q, c).partner();
    m.cell(t, c) = GateCell::cx_control(q);
    m.cell(q, c) = GateCell::cx_target(t);
}

void add_cx(SolutionMatrix& m, Rng& rng) {
    const int n = m.num_qubits();
    if (n < 2) return;
    const int control = uniform_index(rng, n);
    int target = uniform_index(rng, n - 1);
    if (target >= control) ++target;
    Column column = identity_column(n);
    column[static_cast<std::size_t>(control)] = GateCell::cx_control(target);
    column[static_cast<std::size_t>(target)] = GateCell::cx_target(control);
    insert_column(m, std::move(column), rng);
}

void add_single_gate(SolutionMatrix& m, const GateSet& gates, Rng& rng) {
    GateSet non_identity;
    for (BasisGate g : gates) {
        if (g != BasisGate::CX && g != BasisGate::ID) non_identity.push_back(g);
    }
    const int q = uniform_index(rng, m.num_qubits());
    Column column = identity_column(m.num_qubits());
    column[static_cast<std::size_t>(q)] = random_single_qubit_gate(non_identity, rng);
    insert_column(m, std::move(column), rng);
}

}  // namespace

SolutionMatrix mutate(const SolutionMatrix& solution, MutationKind kind, const GateSet& gate_set, Rng& rng) {
    SolutionMatrix m = solution;
    switch (kind) {
        case MutationKind::MutateGate: mutate_gate(m, gate_set, rng); break;
        case MutationKind::GateSwap: gate_swap(m, rng); break;
        case MutationKind::ColumnSwap: column_swap(m, rng); break;
        case MutationKind::SwapCtrlTarg: swap_ctrl_targ(m, rng); break;
        case MutationKind::AddRandomColumn: insert_column(m, random_column(m.num_qubits(), gate_set, rng), rng); break;
        case MutationKind::DeleteColumn:
            if (m.depth() > 1) m.columns().erase(m.columns().begin() + uniform_index(rng, m.depth()));
            break;
        case MutationKind::AddCX: add_cx(m, rng); break;
        case MutationKind::AddSingleGate: add_single_gate(m, gate_set, rng); break;
    }
    return m;
}

}  // namespace qcevo
