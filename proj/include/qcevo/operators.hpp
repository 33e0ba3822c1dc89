#pragma once

#include <array>
#include <span>
#include <string_view>

#include "qcevo/config.hpp"
#include "qcevo/solution_matrix.hpp"

namespace qcevo {

/// Which parent a child takes its depth from.
enum class Parent { First, Second };

// ---------------------------------------------------------------------------
// Crossover
// ---------------------------------------------------------------------------

/// Single-point crossover with an explicit cut and depth source.
///
/// The child has the depth of `depth_from`. Columns [0, cut) come from the
/// first parent and [cut, depth) from the second, except when the child is
/// deeper than one of the parents: then the head comes from the shorter
/// parent and the tail from the longer one. A parent shallower than 2 has no
/// interior cut; the child is then a copy of `depth_from`.
SolutionMatrix single_point_crossover(const SolutionMatrix& p1, const SolutionMatrix& p2, Parent depth_from,
                                      int cut);

/// Draws the depth source and a cut uniformly from [1, min_depth - 1].
SolutionMatrix single_point_crossover(const SolutionMatrix& p1, const SolutionMatrix& p2, Rng& rng);

/// Uniform column crossover with explicit choices. `picks[c]` selects the
/// source of column c for indices both parents share; columns past the
/// shorter parent come from the longer one.
SolutionMatrix uniform_column_crossover(const SolutionMatrix& p1, const SolutionMatrix& p2, Parent depth_from,
                                        std::span<const Parent> picks);

SolutionMatrix uniform_column_crossover(const SolutionMatrix& p1, const SolutionMatrix& p2, Rng& rng);

// ---------------------------------------------------------------------------
// Mutation
// ---------------------------------------------------------------------------

enum class MutationKind {
    MutateGate,
    GateSwap,
    ColumnSwap,
    SwapCtrlTarg,
    AddRandomColumn,
    DeleteColumn,
    AddCX,
    AddSingleGate,
};

inline constexpr std::array<MutationKind, kMutationKindCount> kAllMutationKinds{
    MutationKind::MutateGate,   MutationKind::GateSwap,        MutationKind::ColumnSwap,
    MutationKind::SwapCtrlTarg, MutationKind::AddRandomColumn, MutationKind::DeleteColumn,
    MutationKind::AddCX,        MutationKind::AddSingleGate,
};

std::string_view to_string(MutationKind kind) noexcept;

/// Draws a kind with probability proportional to `weights` (enum order).
MutationKind draw_mutation_kind(const std::array<double, kMutationKindCount>& weights, Rng& rng);

/// Applies one mutation. Kinds whose precondition cannot be met (no CX to
/// flip, no column with two single-qubit cells, depth 1 for deletion, one
/// qubit for AddCX) leave the genome unchanged. The result always validates.
SolutionMatrix mutate(const SolutionMatrix& solution, MutationKind kind, const GateSet& gate_set, Rng& rng);

}  // namespace qcevo
