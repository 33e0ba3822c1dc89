#include "qcevo/fitness.hpp"

#include <string>

#include "qcevo/errors.hpp"

namespace qcevo {

double normalized_depth(int depth, int target_depth) {
    if (target_depth <= 1) throw ConfigError("target depth must be > 1, got " + std::to_string(target_depth));
    if (depth < 1) throw ConfigError("circuit depth must be >= 1, got " + std::to_string(depth));
    return static_cast<double>(depth - 1) / static_cast<double>(target_depth - 1);
}

FitnessBreakdown fitness(double fidelity, int depth, int target_depth, double alpha, double beta) {
    FitnessBreakdown b;
    b.fidelity = fidelity;
    b.normalized_depth = normalized_depth(depth, target_depth);
    b.depth_score = 1.0 - b.normalized_depth;
    b.infidelity = 1.0 - fidelity;
    b.total = alpha * fidelity - beta * b.normalized_depth;
    return b;
}

}  // namespace qcevo
