#include "qcevo/evolution.hpp"

#include <numeric>

#include "qcevo/compactor.hpp"
#include "qcevo/param_opt.hpp"

namespace qcevo {

double depth_reduction_pct(int depth, int target_depth) {
    return 100.0 * static_cast<double>(target_depth - depth) / static_cast<double>(target_depth);
}

SolutionMatrix random_initial_solution(const Target& target, const EAConfig& config, Rng& rng) {
    const int hi = config.init_depth_max > 0 ? config.init_depth_max : target.depth;
    const int lo = std::min(config.init_depth_min, hi);
    return random_solution(target.state.num_qubits(), lo, hi, config.gate_set, rng);
}

SolutionMatrix fresh_solution(const Target& target, const EAConfig& config, Rng& rng) {
    if (config.init_mode == InitMode::Target) {
        if (!target.circuit) throw ConfigError("target init mode requires the target circuit");
        return *target.circuit;
    }
    return random_initial_solution(target, config, rng);
}

Child make_child(const Individual& p1, const Individual& p2, const Target& target, const EAConfig& config, Rng& rng) {
    std::optional<MutationKind> mutation;
    ChildOrigin origin = ChildOrigin::ParentClone;
    SolutionMatrix genome = p1.solution();

    if (config.variant != Variant::NoEaOps) {
        std::bernoulli_distribution crossover(config.crossover_rate);
        std::bernoulli_distribution mutate_draw(config.mutation_rate);
        std::bernoulli_distribution coin(0.5);
        if (crossover(rng)) {
            if (coin(rng)) {
                origin = ChildOrigin::SinglePointCrossover;
                genome = single_point_crossover(p1.solution(), p2.solution(), rng);
            } else {
                origin = ChildOrigin::UniformCrossover;
                genome = uniform_column_crossover(p1.solution(), p2.solution(), rng);
            }
        } else if (coin(rng)) {
            origin = ChildOrigin::FreshRandom;
            genome = fresh_solution(target, config, rng);
        } else {
            genome = coin(rng) ? p1.solution() : p2.solution();
        }
        if (mutate_draw(rng)) {
            mutation = draw_mutation_kind(config.mutation_weights, rng);
            genome = mutate(genome, *mutation, config.gate_set, rng);
        }
    }
    if (config.compaction_active()) genome = compact(genome);
    return {Individual::evaluate(std::move(genome), target, config), origin, mutation};
}

std::pair<std::size_t, std::size_t> select_parents(std::size_t population_size, Rng& rng) {
    if (population_size == 0) throw ConfigError("select_parents: empty population");
    std::uniform_int_distribution<std::size_t> pick(0, population_size - 1);
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    return {a, b};
}

void survivor_replacement(std::vector<Individual>& population, std::vector<Individual> children,
                          const EAConfig& config) {
    const int m = config.offspring_count();
    const int n = config.replace_count();
    if (n > m) throw ConfigError("survivor replacement: replace count exceeds offspring count");
    replace_worst(population, std::move(children), static_cast<std::size_t>(n),
                  [](const Individual& i) { return i.fitness(); });
}

std::size_t best_index(const std::vector<Individual>& population) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
        if (population[i].fitness() > population[best].fitness()) best = i;
    }
    return best;
}

namespace {

Target checked_target(Target target, const EAConfig& config) {
    config.validate();
    if (target.depth < 2) throw ConfigError("target depth must be >= 2");
    if (target.circuit && target.circuit->num_qubits() != target.state.num_qubits()) {
        throw ConfigError("target circuit and state differ in qubit count");
    }
    if (config.init_mode == InitMode::Target && !target.circuit) {
        throw ConfigError("target init mode requires the target circuit");
    }
    return target;
}

double mean_fitness(const std::vector<Individual>& individuals) {
    double sum = 0.0;
    for (const auto& i : individuals) sum += i.fitness();
    return individuals.empty() ? 0.0 : sum / static_cast<double>(individuals.size());
}

}  // namespace

Evolution::Evolution(Target target, EAConfig config)
    : target_(checked_target(std::move(target), config)), config_(std::move(config)), rng_(config_.seed) {
    population_.reserve(static_cast<std::size_t>(config_.population_size));
    for (int i = 0; i < config_.population_size; ++i) {
        SolutionMatrix genome = fresh_solution(target_, config_, rng_);
        if (config_.compaction_active()) genome = compact(genome);
        population_.push_back(Individual::evaluate(std::move(genome), target_, config_));
    }
    best_so_far_ = population_[best_index(population_)];
    check_population();
    records_.push_back(make_record(mean_fitness(population_)));
}

const Individual& Evolution::best() const {
    if (config_.variant == Variant::RandomBaseline) return *best_so_far_;
    return population_[best_index(population_)];
}

GenerationRecord Evolution::make_record(double mean) const {
    const Individual& b = best();
    GenerationRecord r;
    r.generation = generation_;
    r.best_fitness = b.fitness();
    r.mean_fitness = mean;
    r.best_fidelity = b.fidelity();
    r.best_depth = b.depth();
    r.depth_reduction_pct = depth_reduction_pct(b.depth(), target_.depth);
    return r;
}

void Evolution::check_population() const {
    for (const Individual& ind : population_) {
        if (auto err = validate(ind.solution())) {
            throw InvariantViolation("generation " + std::to_string(generation_) + ": invalid genome: " + *err);
        }
    }
}

void Evolution::step_evolutionary() {
    const int m = config_.offspring_count();
    std::vector<Individual> children;
    children.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto [a, b] = select_parents(population_.size(), rng_);
        children.push_back(make_child(population_[a], population_[b], target_, config_, rng_).individual);
    }
    survivor_replacement(population_, std::move(children), config_);

    last_optimized_.clear();
    const bool optimizes = config_.variant == Variant::Hybrid || config_.variant == Variant::NoEaOps;
    if (optimizes && generation_ % config_.param_opt_interval == 0) {
        last_optimized_ = hybrid_hook(population_, target_, config_, rng_);
    }
}

double Evolution::step_random_baseline() {
    const int m = config_.offspring_count();
    std::vector<Individual> batch;
    batch.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        batch.push_back(Individual::evaluate(random_initial_solution(target_, config_, rng_), target_, config_));
    }
    if (!batch.empty()) {
        const Individual& batch_best = batch[best_index(batch)];
        if (batch_best.fitness() > best_so_far_->fitness()) best_so_far_ = batch_best;
    }
    return batch.empty() ? best_so_far_->fitness() : mean_fitness(batch);
}

GenerationRecord Evolution::step() {
    ++generation_;
    double mean = 0.0;
    if (config_.variant == Variant::RandomBaseline) {
        mean = step_random_baseline();
    } else {
        step_evolutionary();
        mean = mean_fitness(population_);
        const Individual& current = population_[best_index(population_)];
        if (current.fitness() > best_so_far_->fitness()) best_so_far_ = current;
    }
    check_population();
    records_.push_back(make_record(mean));
    return records_.back();
}

std::vector<GenerationRecord> Evolution::run() {
    while (generation_ < config_.generations) step();
    return records_;
}

}  // namespace qcevo
