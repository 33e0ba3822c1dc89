#include "qcevo/param_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcevo/errors.hpp"
#include "qcevo/nelder_mead.hpp"

namespace qcevo {

ParamVector extract_params(const SolutionMatrix& solution) {
    ParamVector params;
    for (int q = 0; q < solution.num_qubits(); ++q) {
        for (int c = 0; c < solution.depth(); ++c) {
            const GateCell& cell = solution.cell(q, c);
            if (cell.kind() == GateKind::RZ) {
                params.locations.push_back({q, c});
                params.angles.push_back(cell.theta());
            }
        }
    }
    return params;
}

SolutionMatrix with_angles(const SolutionMatrix& solution, std::span<const ParamVector::Location> locations,
                           std::span<const double> angles) {
    if (locations.size() != angles.size()) throw InvariantViolation("with_angles: location/angle count mismatch");
    SolutionMatrix out = solution;
    for (std::size_t i = 0; i < locations.size(); ++i) {
        const auto [q, c] = locations[i];
        if (q < 0 || q >= out.num_qubits() || c < 0 || c >= out.depth() || out.cell(q, c).kind() != GateKind::RZ) {
            throw InvariantViolation("with_angles: parameter location is not an RZ cell");
        }
        out.cell(q, c).set_theta(angles[i]);
    }
    return out;
}

double objective(const SolutionMatrix& solution, const ParamVector& params, const Statevector& target) {
    const SolutionMatrix bound = with_angles(solution, params.locations, params.angles);
    return 1.0 - fidelity(simulate(bound), target);
}

OptimizeOutcome optimize_angles(const Individual& individual, const Target& target, const OptimizerSettings& settings,
                                double alpha, double beta) {
    const double initial = 1.0 - individual.fidelity();
    const ParamVector params = extract_params(individual.solution());
    if (params.size() == 0) return {individual, initial, initial, 0};

    const Objective f = [&](std::span<const double> angles) {
        return 1.0 - fidelity(simulate(with_angles(individual.solution(), params.locations, angles)), target.state);
    };
    const NelderMeadResult result =
        nelder_mead(f, params.angles, {settings.initial_step, settings.tolerance, settings.max_evaluations});

    if (!(result.value < initial)) return {individual, initial, initial, result.evaluations};
    Individual improved =
        Individual::evaluate(with_angles(individual.solution(), params.locations, result.x), target, alpha, beta);
    return {std::move(improved), initial, result.value, result.evaluations};
}

std::vector<std::size_t> hybrid_hook(std::vector<Individual>& population, const Target& target,
                                     const EAConfig& config, Rng& rng) {
    const auto size = population.size();
    const auto wanted = static_cast<std::size_t>(
        std::max(0.0, std::ceil(config.param_opt_fraction * static_cast<double>(size) - 1e-9)));
    const std::size_t count = std::min(wanted, size);

    std::vector<std::size_t> indices(size);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    std::shuffle(indices.begin(), indices.end(), rng);
    indices.resize(count);

    const OptimizerSettings settings = OptimizerSettings::from(config);
    for (std::size_t i : indices) {
        population[i] = optimize_angles(population[i], target, settings, config.alpha, config.beta).individual;
    }
    return indices;
}

}  // namespace qcevo
