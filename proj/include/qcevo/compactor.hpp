#pragma once

#include "qcevo/solution_matrix.hpp"

namespace qcevo {

// Genome simplification that never changes the prepared state (up to a
// global phase from angle wrapping). Not exhaustive.

/// RZ(a) directly followed by RZ(b) on the same qubit becomes RZ(a+b), ID.
SolutionMatrix merge_rotations(const SolutionMatrix& matrix);

/// Moves every gate left across identity cells until nothing can move. A CX
/// pair moves only when both of its cells in the previous column are ID.
SolutionMatrix shift_gates_left(const SolutionMatrix& matrix);

/// Removes all-ID columns, keeping one if the matrix would become empty.
SolutionMatrix drop_identity_columns(const SolutionMatrix& matrix);

/// merge -> shift -> drop, repeated until a full round changes nothing.
SolutionMatrix compact(const SolutionMatrix& matrix);

}  // namespace qcevo
