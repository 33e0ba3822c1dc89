#pragma once

#include <optional>

#include "qcevo/config.hpp"
#include "qcevo/fitness.hpp"
#include "qcevo/simulator.hpp"
#include "qcevo/solution_matrix.hpp"

namespace qcevo {

/// The state to prepare, its reference depth d, and (optionally) the circuit
/// that produced it.
struct Target {
    Statevector state;
    int depth;
    std::optional<SolutionMatrix> circuit;
};

/// A genome with its simulated state and fitness. Cached values are computed
/// at construction; a changed genome means a new Individual.
class Individual {
public:
    static Individual evaluate(SolutionMatrix solution, const Target& target, double alpha, double beta);
    static Individual evaluate(SolutionMatrix solution, const Target& target, const EAConfig& config) {
        return evaluate(std::move(solution), target, config.alpha, config.beta);
    }

    const SolutionMatrix& solution() const noexcept { return solution_; }
    const Statevector& state() const noexcept { return state_; }
    double fidelity() const noexcept { return breakdown_.fidelity; }
    int depth() const noexcept { return solution_.depth(); }
    double fitness() const noexcept { return breakdown_.total; }
    const FitnessBreakdown& breakdown() const noexcept { return breakdown_; }

private:
    Individual(SolutionMatrix solution, Statevector state, FitnessBreakdown breakdown)
        : solution_(std::move(solution)), state_(std::move(state)), breakdown_(breakdown) {}

    SolutionMatrix solution_;
    Statevector state_;
    FitnessBreakdown breakdown_;
};

}  // namespace qcevo
