#pragma once

namespace qcevo {

struct FitnessBreakdown {
    double fidelity = 0.0;         // F
    double normalized_depth = 0.0;  // (δ - 1) / (d - 1)
    double depth_score = 0.0;       // A = 1 - normalized_depth
    double infidelity = 0.0;        // B = 1 - F
    double total = 0.0;             // α·F - β·normalized_depth
};

/// (depth - 1) / (target_depth - 1). Not clamped: circuits deeper than the
/// target score above 1. Throws ConfigError unless target_depth >= 2 and
/// depth >= 1.
double normalized_depth(int depth, int target_depth);

FitnessBreakdown fitness(double fidelity, int depth, int target_depth, double alpha, double beta);

}  // namespace qcevo
