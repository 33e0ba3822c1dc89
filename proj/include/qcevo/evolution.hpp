#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "qcevo/config.hpp"
#include "qcevo/errors.hpp"
#include "qcevo/individual.hpp"
#include "qcevo/operators.hpp"

namespace qcevo {

/// Metrics of one generation. Generation 0 is the initial population.
struct GenerationRecord {
    int generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double best_fidelity = 0.0;
    int best_depth = 0;
    double depth_reduction_pct = 0.0;

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

/// 100 · (target_depth - depth) / target_depth.
double depth_reduction_pct(int depth, int target_depth);

enum class ChildOrigin { SinglePointCrossover, UniformCrossover, FreshRandom, ParentClone };

struct Child {
    Individual individual;
    ChildOrigin origin;
    std::optional<MutationKind> mutation;
};

/// Genome for a newly injected individual: random in scratch mode, the target
/// circuit in target mode. Not compacted.
SolutionMatrix fresh_solution(const Target& target, const EAConfig& config, Rng& rng);

/// Random genome in the configured scratch depth range, regardless of mode.
SolutionMatrix random_initial_solution(const Target& target, const EAConfig& config, Rng& rng);

/// Builds one child: crossover or (random | clone), optional single mutation,
/// compaction when enabled, then evaluation. The no-EA-ops variant skips
/// crossover and mutation and clones `p1`.
Child make_child(const Individual& p1, const Individual& p2, const Target& target, const EAConfig& config, Rng& rng);

/// Two independent uniform draws of population indices (may coincide).
std::pair<std::size_t, std::size_t> select_parents(std::size_t population_size, Rng& rng);

/// Sorts `population` by descending fitness (stable) and overwrites its worst
/// `n` slots with the best `n` of `children`, in children-rank order. The
/// replacement is unconditional. n = 0 leaves the population untouched.
template <typename T, typename FitnessOf>
void replace_worst(std::vector<T>& population, std::vector<T> children, std::size_t n, FitnessOf fitness_of) {
    if (n > children.size()) throw ConfigError("survivor replacement: n exceeds number of children");
    if (n > population.size()) throw ConfigError("survivor replacement: n exceeds population size");
    if (n == 0) return;
    auto descending = [&](const T& a, const T& b) { return fitness_of(a) > fitness_of(b); };
    std::stable_sort(population.begin(), population.end(), descending);
    std::stable_sort(children.begin(), children.end(), descending);
    const std::size_t first = population.size() - n;
    for (std::size_t i = 0; i < n; ++i) population[first + i] = std::move(children[i]);
}

void survivor_replacement(std::vector<Individual>& population, std::vector<Individual> children,
                          const EAConfig& config);

/// Index of the fittest member; ties go to the lowest index.
std::size_t best_index(const std::vector<Individual>& population);

/// One evolutionary run for a single seed. Construction builds and records
/// generation 0; each step() advances one generation.
class Evolution {
public:
    Evolution(Target target, EAConfig config);

    /// Runs the next generation and returns its record.
    GenerationRecord step();

    /// Steps until config.generations is reached; returns every record
    /// including generation 0.
    std::vector<GenerationRecord> run();

    int generation() const noexcept { return generation_; }
    const std::vector<Individual>& population() const noexcept { return population_; }
    const std::vector<GenerationRecord>& records() const noexcept { return records_; }
    const Target& target() const noexcept { return target_; }
    const EAConfig& config() const noexcept { return config_; }

    /// Population best, or the best-so-far individual for the random baseline.
    const Individual& best() const;

    /// Touched indices of the most recent parameter-optimization pass.
    const std::vector<std::size_t>& last_optimized() const noexcept { return last_optimized_; }

private:
    GenerationRecord make_record(double mean_fitness) const;
    void step_evolutionary();
    double step_random_baseline();
    void check_population() const;

    Target target_;
    EAConfig config_;
    Rng rng_;
    int generation_ = 0;
    std::vector<Individual> population_;
    std::optional<Individual> best_so_far_;
    std::vector<GenerationRecord> records_;
    std::vector<std::size_t> last_optimized_;
};

}  // namespace qcevo
