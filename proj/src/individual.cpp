#include "qcevo/individual.hpp"

namespace qcevo {

Individual Individual::evaluate(SolutionMatrix solution, const Target& target, double alpha, double beta) {
    Statevector state = simulate(solution);
    const double f = qcevo::fidelity(state, target.state);
    const FitnessBreakdown breakdown = qcevo::fitness(f, solution.depth(), target.depth, alpha, beta);
    return Individual(std::move(solution), std::move(state), breakdown);
}

}  // namespace qcevo
