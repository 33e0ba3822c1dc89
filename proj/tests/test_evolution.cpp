#include <gtest/gtest.h>

#include <cmath>

#include "qcevo/compactor.hpp"
#include "qcevo/evolution.hpp"
#include "qcevo/experiment.hpp"

using namespace qcevo;

namespace {

EAConfig small_config(Variant variant, std::uint64_t seed = 0) {
    EAConfig c;
    c.population_size = 20;
    c.generations = 30;
    c.max_optimizer_iterations = 100;
    c.param_opt_interval = 5;
    c.variant = variant;
    c.seed = seed;
    return c;
}

const TargetInstance& small_target() {
    static const TargetInstance t = generate_target(3, 8, 42);
    return t;
}

}  // namespace

TEST(ReplaceWorst, TraceOfTheRule) {
    std::vector<double> pop{2, 5, 3, 4};
    replace_worst(pop, std::vector<double>{1, 9}, 2, [](double f) { return f; });
    EXPECT_EQ(pop, (std::vector<double>{5, 4, 9, 1}));
}

TEST(ReplaceWorst, ReplacementIsUnconditional) {
    std::vector<double> pop{5, 4, 3, 2};
    replace_worst(pop, std::vector<double>{0, -1, -3}, 2, [](double f) { return f; });
    EXPECT_EQ(pop, (std::vector<double>{5, 4, 0, -1}));
}

TEST(ReplaceWorst, ZeroReplacementLeavesPopulationUntouched) {
    std::vector<double> pop{2, 5, 3};
    replace_worst(pop, std::vector<double>{}, 0, [](double f) { return f; });
    EXPECT_EQ(pop, (std::vector<double>{2, 5, 3}));
    EXPECT_THROW(replace_worst(pop, std::vector<double>{1.0}, 2, [](double f) { return f; }), ConfigError);
}

TEST(ReplaceWorst, StableOnTies) {
    std::vector<std::pair<double, int>> pop{{1, 0}, {1, 1}, {1, 2}};
    replace_worst(pop, std::vector<std::pair<double, int>>{{0, 9}}, 1, [](const auto& p) { return p.first; });
    EXPECT_EQ(pop[0].second, 0);
    EXPECT_EQ(pop[1].second, 1);
    EXPECT_EQ(pop[2].second, 9);
}

TEST(SurvivorReplacement, ReplaceCountAboveOffspringCountIsConfigError) {
    EAConfig c = small_config(Variant::EaOnly);
    c.replace_rate = 0.5;
    c.offspring_rate = 0.2;
    EXPECT_THROW(c.validate(), ConfigError);
    std::vector<Individual> pop;
    EXPECT_THROW(survivor_replacement(pop, {}, c), ConfigError);
}

TEST(SelectParents, SingleMember) {
    Rng rng(1);
    EXPECT_EQ(select_parents(1, rng), (std::pair<std::size_t, std::size_t>{0, 0}));
}

TEST(SelectParents, UniformOverIndices) {
    Rng rng(2);
    std::vector<int> counts(200, 0);
    for (int i = 0; i < 50000; ++i) {
        const auto [a, b] = select_parents(200, rng);
        ++counts[a];
        ++counts[b];
    }
    // 100 000 draws, p = 1/200: mean 500, sigma = sqrt(100000 * p * (1 - p)) ≈ 22.3
    const double sigma = std::sqrt(100000.0 * (1.0 / 200.0) * (199.0 / 200.0));
    for (int c : counts) EXPECT_LT(std::abs(c - 500.0), 5.0 * sigma);
}

TEST(MakeChild, PureCrossoverOfIdenticalParentsIsAClone) {
    const Target target = small_target().as_target();
    EAConfig c = small_config(Variant::EaOnly);
    c.crossover_rate = 1.0;
    c.mutation_rate = 0.0;
    Rng rng(3);
    const Individual parent = Individual::evaluate(compact(random_solution(3, 6, 6, c.gate_set, rng)), target, c);
    for (int i = 0; i < 50; ++i) {
        const Child child = make_child(parent, parent, target, c, rng);
        EXPECT_EQ(child.individual.solution(), parent.solution());
        EXPECT_EQ(child.individual.fitness(), parent.fitness());
        EXPECT_FALSE(child.mutation);
    }
}

TEST(MakeChild, NoCrossoverBranchSplitsEvenly) {
    const Target target = small_target().as_target();
    EAConfig c = small_config(Variant::EaOnly);
    c.crossover_rate = 0.0;
    c.mutation_rate = 0.0;
    Rng rng(4);
    const Individual p = Individual::evaluate(random_solution(3, 4, 4, c.gate_set, rng), target, c);
    int fresh = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
        const Child child = make_child(p, p, target, c, rng);
        ASSERT_TRUE(child.origin == ChildOrigin::FreshRandom || child.origin == ChildOrigin::ParentClone);
        fresh += child.origin == ChildOrigin::FreshRandom;
    }
    // Binomial(10000, 0.5): sigma = 50; allow 5 sigma.
    EXPECT_LT(std::abs(fresh - trials / 2), 250);
}

TEST(MakeChild, MutationRateOneAlwaysLogsAKind) {
    const Target target = small_target().as_target();
    EAConfig c = small_config(Variant::EaOnly);
    c.mutation_rate = 1.0;
    Rng rng(5);
    const Individual p = Individual::evaluate(random_solution(3, 4, 4, c.gate_set, rng), target, c);
    for (int i = 0; i < 100; ++i) {
        const Child child = make_child(p, p, target, c, rng);
        ASSERT_TRUE(child.mutation.has_value());
        EXPECT_FALSE(validate(child.individual.solution()));
    }
}

TEST(MakeChild, NoEaOpsVariantClonesFirstParent) {
    const Target target = small_target().as_target();
    EAConfig c = small_config(Variant::NoEaOps);
    Rng rng(6);
    const Individual p1 = Individual::evaluate(compact(random_solution(3, 5, 5, c.gate_set, rng)), target, c);
    const Individual p2 = Individual::evaluate(compact(random_solution(3, 5, 5, c.gate_set, rng)), target, c);
    for (int i = 0; i < 20; ++i) {
        const Child child = make_child(p1, p2, target, c, rng);
        EXPECT_EQ(child.individual.solution(), p1.solution());
        EXPECT_EQ(child.origin, ChildOrigin::ParentClone);
        EXPECT_FALSE(child.mutation);
    }
}

TEST(MakeChild, TargetModeFreshIndividualsAreTheTarget) {
    const Target target = small_target().as_target();
    EAConfig c = small_config(Variant::EaOnly);
    c.init_mode = InitMode::Target;
    c.crossover_rate = 0.0;
    c.mutation_rate = 0.0;
    Rng rng(7);
    const Individual p = Individual::evaluate(SolutionMatrix(3), target, c);
    for (int i = 0; i < 50; ++i) {
        const Child child = make_child(p, p, target, c, rng);
        if (child.origin == ChildOrigin::FreshRandom) {
            EXPECT_EQ(child.individual.solution(), *target.circuit);
            EXPECT_EQ(child.individual.fidelity(), 1.0);
        }
    }
}

TEST(Evolution, ZeroGenerationsRecordsInitialPopulationOnly) {
    EAConfig c = small_config(Variant::Hybrid);
    c.generations = 0;
    Evolution evo(small_target().as_target(), c);
    const auto records = evo.run();
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].generation, 0);
    EXPECT_EQ(records[0].best_fitness, evo.best().fitness());
}

TEST(Evolution, HybridHookFiresOnInterval) {
    EAConfig c = small_config(Variant::Hybrid);
    c.param_opt_fraction = 0.1;
    Evolution evo(small_target().as_target(), c);
    for (int g = 1; g <= 12; ++g) {
        evo.step();
        const std::size_t expected = g % 5 == 0 ? 2u : 0u;
        EXPECT_EQ(evo.last_optimized().size(), expected) << "generation " << g;
    }
    EAConfig ea = small_config(Variant::EaOnly);
    Evolution plain(small_target().as_target(), ea);
    for (int g = 1; g <= 10; ++g) {
        plain.step();
        EXPECT_TRUE(plain.last_optimized().empty());
    }
}

TEST(Evolution, HookTouchesTwentyOfTwoHundred) {
    EAConfig c;
    c.population_size = 200;
    c.max_optimizer_iterations = 5;
    EXPECT_EQ(c.param_opt_count(), 20);
    EXPECT_EQ(c.offspring_count(), 60);
    EXPECT_EQ(c.replace_count(), 60);
    c.param_opt_interval = 1;
    Evolution evo(small_target().as_target(), c);
    evo.step();
    EXPECT_EQ(evo.last_optimized().size(), 20u);
    std::set<std::size_t> distinct(evo.last_optimized().begin(), evo.last_optimized().end());
    EXPECT_EQ(distinct.size(), 20u);
}

TEST(Evolution, InvariantsAcrossGenerations) {
    for (Variant v : {Variant::Hybrid, Variant::EaOnly, Variant::NoEaOps, Variant::RandomBaseline}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const EAConfig c = small_config(v, seed);
            Evolution evo(small_target().as_target(), c);
            const auto records = evo.run();
            ASSERT_EQ(records.size(), static_cast<std::size_t>(c.generations + 1));
            for (std::size_t g = 1; g < records.size(); ++g) {
                EXPECT_GE(records[g].best_fitness, records[g - 1].best_fitness) << to_string(v) << " gen " << g;
            }
            EXPECT_EQ(evo.population().size(), static_cast<std::size_t>(c.population_size));
            const int d = small_target().depth;
            for (const Individual& ind : evo.population()) {
                ASSERT_FALSE(validate(ind.solution()));
                const double expected = c.alpha * ind.fidelity() - c.beta * (ind.depth() - 1.0) / (d - 1.0);
                EXPECT_NEAR(ind.fitness(), expected, 1e-12);
                EXPECT_EQ(ind.depth(), ind.solution().depth());
            }
            for (const auto& r : records) {
                EXPECT_GE(r.best_fidelity, 0.0);
                EXPECT_LE(r.best_fidelity, 1.0);
                EXPECT_LE(r.depth_reduction_pct, 100.0 * (d - 1.0) / d + 1e-12);
            }
        }
    }
}

TEST(Evolution, DeterministicForFixedSeed) {
    for (Variant v : {Variant::Hybrid, Variant::RandomBaseline}) {
        const EAConfig c = small_config(v, 9);
        Evolution a(small_target().as_target(), c);
        Evolution b(small_target().as_target(), c);
        EXPECT_EQ(a.run(), b.run());
    }
}

TEST(Evolution, TargetModeNoEaOpsStaysAtTarget) {
    EAConfig c = small_config(Variant::NoEaOps);
    c.init_mode = InitMode::Target;
    Evolution evo(small_target().as_target(), c);
    for (const auto& r : evo.run()) {
        EXPECT_EQ(r.best_fidelity, 1.0);
        EXPECT_EQ(r.best_depth, small_target().depth);
        EXPECT_EQ(r.depth_reduction_pct, 0.0);
    }
}

TEST(Evolution, RandomBaselineKeepsBestSoFar) {
    const EAConfig c = small_config(Variant::RandomBaseline, 3);
    Evolution evo(small_target().as_target(), c);
    const auto initial = evo.population();
    double best = -1e300;
    for (const auto& r : evo.run()) {
        EXPECT_GE(r.best_fitness, best);
        best = r.best_fitness;
    }
    ASSERT_EQ(evo.population().size(), initial.size());
    for (std::size_t i = 0; i < initial.size(); ++i) EXPECT_EQ(evo.population()[i].solution(), initial[i].solution());
}

TEST(Evolution, RejectsBadSetup) {
    EAConfig c = small_config(Variant::Hybrid);
    Target t = small_target().as_target();
    t.depth = 1;
    EXPECT_THROW(Evolution(t, c), ConfigError);
    Target no_circuit = small_target().as_target();
    no_circuit.circuit.reset();
    c.init_mode = InitMode::Target;
    EXPECT_THROW(Evolution(no_circuit, c), ConfigError);
}
