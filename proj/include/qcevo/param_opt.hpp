#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qcevo/config.hpp"
#include "qcevo/individual.hpp"

namespace qcevo {

/// Positions of every RZ cell of a genome, scanned qubit by qubit then
/// column by column, with their angles.
struct ParamVector {
    struct Location {
        int qubit;
        int column;
        friend bool operator==(const Location&, const Location&) = default;
    };
    std::vector<Location> locations;
    std::vector<double> angles;

    std::size_t size() const noexcept { return angles.size(); }
};

ParamVector extract_params(const SolutionMatrix& solution);

/// Copy of `solution` with `angles` written (wrapped into [0, 2π)) at
/// `locations`. Throws InvariantViolation if a location is not an RZ cell or
/// the sizes differ.
SolutionMatrix with_angles(const SolutionMatrix& solution, std::span<const ParamVector::Location> locations,
                           std::span<const double> angles);

/// 1 - F(simulate(solution with params), target). `solution` is not modified.
double objective(const SolutionMatrix& solution, const ParamVector& params, const Statevector& target);

struct OptimizerSettings {
    int max_evaluations = 1000;
    double initial_step = 0.5;
    double tolerance = 1e-6;

    static OptimizerSettings from(const EAConfig& config) {
        return {config.max_optimizer_iterations, config.optimizer_initial_step, config.optimizer_tolerance};
    }
};

struct OptimizeOutcome {
    Individual individual;
    double initial_objective;
    double final_objective;
    int evaluations;
};

/// Minimizes 1 - F over all RZ angles of `individual`, starting from its
/// current angles. Structure never changes and the result is never worse than
/// the input. Genomes without RZ gates are returned unchanged.
OptimizeOutcome optimize_angles(const Individual& individual, const Target& target, const OptimizerSettings& settings,
                                double alpha, double beta);

inline Individual optimize(const Individual& individual, const Target& target, const EAConfig& config) {
    return optimize_angles(individual, target, OptimizerSettings::from(config), config.alpha, config.beta).individual;
}

/// Optimizes ceil(param_opt_fraction × size) distinct, uniformly chosen
/// members in place. Returns the touched indices in optimization order.
std::vector<std::size_t> hybrid_hook(std::vector<Individual>& population, const Target& target,
                                     const EAConfig& config, Rng& rng);

}  // namespace qcevo
