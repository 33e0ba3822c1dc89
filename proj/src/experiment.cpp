#include "qcevo/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "qcevo/compactor.hpp"
#include "qcevo/serialization.hpp"

namespace qcevo {

using nlohmann::json;

TargetInstance generate_target(int num_qubits, int depth, std::uint64_t seed, const GateSet& gate_set) {
    if (depth < 2) throw ConfigError("generate_target: depth must be >= 2");
    const bool has_non_identity =
        std::any_of(gate_set.begin(), gate_set.end(), [](BasisGate g) { return g != BasisGate::ID; });
    if (!has_non_identity) throw ConfigError("generate_target: gate set has only identities");

    Rng rng(seed);
    SolutionMatrix circuit(num_qubits, {random_column(num_qubits, gate_set, rng)});
    circuit = compact(circuit);
    // Appending one column grows the compacted depth by at most one.
    const int max_attempts = 1000 * depth;
    for (int attempt = 0; circuit.depth() < depth; ++attempt) {
        if (attempt >= max_attempts) throw ConfigError("generate_target: could not reach requested depth");
        circuit.columns().push_back(random_column(num_qubits, gate_set, rng));
        circuit = compact(circuit);
    }
    Statevector state = simulate(circuit);
    return TargetInstance{std::move(circuit), std::move(state), depth, seed};
}

void save_target(const TargetInstance& target, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_json_file(dir / "target_circuit.json", solution_to_json(target.circuit));
    write_json_file(dir / "target_state.json", statevector_to_json(target.state));
    write_json_file(dir / "target.json",
                    json{{"num_qubits", target.circuit.num_qubits()}, {"depth", target.depth}, {"seed", target.seed}});
    export_qasm(target.circuit, dir / "target.qasm");
}

TargetInstance load_target(const std::filesystem::path& dir) {
    const json meta = read_json_file(dir / "target.json");
    SolutionMatrix circuit = solution_from_json(read_json_file(dir / "target_circuit.json"));
    Statevector state = statevector_from_json(read_json_file(dir / "target_state.json"));
    const int depth = meta.at("depth").get<int>();
    if (state.num_qubits() != circuit.num_qubits()) throw InvariantViolation("target state/circuit qubit mismatch");
    if (fidelity(simulate(circuit), state) < 1.0 - 1e-9) {
        throw InvariantViolation("target_state.json does not match target_circuit.json");
    }
    return TargetInstance{std::move(circuit), std::move(state), depth, meta.at("seed").get<std::uint64_t>()};
}

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string records_to_csv(const std::vector<GenerationRecord>& records) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const GenerationRecord& r : records) {
        out += std::to_string(r.generation);
        out += ',' + format_double(r.best_fitness);
        out += ',' + format_double(r.mean_fitness);
        out += ',' + format_double(r.best_fidelity);
        out += ',' + std::to_string(r.best_depth);
        out += ',' + format_double(r.depth_reduction_pct);
        out += '\n';
    }
    return out;
}

SeedResult run_seed(const Target& target, EAConfig config, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    config.seed = seed;
    Evolution evolution(target, config);
    SeedResult result;
    result.seed = seed;
    result.records = evolution.run();
    const Individual& best = evolution.best();
    result.best_solution = best.solution();
    result.best_fidelity = best.fidelity();
    result.best_depth = best.depth();
    result.depth_reduction_pct = depth_reduction_pct(best.depth(), target.depth);
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

json config_to_json(const EAConfig& c) {
    json gates = json::array();
    for (BasisGate g : c.gate_set) gates.push_back(std::string(to_string(g)));
    return json{
        {"population_size", c.population_size},
        {"generations", c.generations},
        {"crossover_rate", c.crossover_rate},
        {"mutation_rate", c.mutation_rate},
        {"offspring_rate", c.offspring_rate},
        {"replace_rate", c.replace_rate},
        {"gate_set", gates},
        {"max_optimizer_iterations", c.max_optimizer_iterations},
        {"optimizer_initial_step", c.optimizer_initial_step},
        {"optimizer_tolerance", c.optimizer_tolerance},
        {"alpha", c.alpha},
        {"beta", c.beta},
        {"param_opt_interval", c.param_opt_interval},
        {"param_opt_fraction", c.param_opt_fraction},
        {"init_depth_min", c.init_depth_min},
        {"init_depth_max", c.init_depth_max},
        {"mutation_weights", c.mutation_weights},
        {"init_mode", std::string(to_string(c.init_mode))},
        {"variant", std::string(to_string(c.variant))},
        {"compaction_enabled", c.compaction_enabled},
    };
}

json summary_to_json(const ExperimentSummary& summary, const ExperimentSpec& spec) {
    json per_seed = json::array();
    json seeds = json::array();
    for (const SeedResult& r : summary.per_seed) {
        seeds.push_back(r.seed);
        per_seed.push_back({{"seed", r.seed},
                            {"best_fidelity", r.best_fidelity},
                            {"best_depth", r.best_depth},
                            {"depth_reduction_pct", r.depth_reduction_pct},
                            {"wall_time_s", r.wall_time_s}});
    }
    return json{
        {"seeds", seeds},
        {"num_qubits", spec.target.circuit.num_qubits()},
        {"target_depth", spec.target.depth},
        {"target_seed", spec.target.seed},
        {"config", config_to_json(spec.config)},
        {"depth_metric", "genome column count (after compaction when enabled)"},
        {"per_seed", per_seed},
        {"mean",
         {{"best_fidelity", summary.mean_best_fidelity},
          {"best_depth", summary.mean_best_depth},
          {"depth_reduction_pct", summary.mean_depth_reduction_pct},
          {"wall_time_s", summary.mean_wall_time_s}}},
    };
}

ExperimentSummary run_experiment(const ExperimentSpec& spec) {
    if (spec.seeds.empty()) throw ConfigError("experiment needs at least one seed");
    if (spec.target.depth < 2) throw ConfigError("target depth must be >= 2");
    spec.config.validate();
    if (!spec.output_dir.empty()) std::filesystem::create_directories(spec.output_dir);

    const Target target = spec.target.as_target();
    ExperimentSummary summary;
    summary.per_seed.resize(spec.seeds.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < spec.seeds.size(); i = next++) {
            try {
                summary.per_seed[i] = run_seed(target, spec.config, spec.seeds[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const auto thread_count =
        static_cast<std::size_t>(std::clamp<std::size_t>(static_cast<std::size_t>(std::max(spec.threads, 1)), 1,
                                                         spec.seeds.size()));
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    const auto count = static_cast<double>(summary.per_seed.size());
    for (const SeedResult& r : summary.per_seed) {
        summary.mean_best_fidelity += r.best_fidelity / count;
        summary.mean_best_depth += r.best_depth / count;
        summary.mean_depth_reduction_pct += r.depth_reduction_pct / count;
        summary.mean_wall_time_s += r.wall_time_s / count;
    }

    if (!spec.output_dir.empty()) {
        for (const SeedResult& r : summary.per_seed) {
            const std::string stem = "seed_" + std::to_string(r.seed);
            std::ofstream csv(spec.output_dir / (stem + ".csv"), std::ios::binary);
            csv << records_to_csv(r.records);
            if (!csv) throw std::runtime_error("cannot write CSV for seed " + std::to_string(r.seed));
            write_json_file(spec.output_dir / ("best_" + stem + ".json"), solution_to_json(r.best_solution));
            export_qasm(r.best_solution, spec.output_dir / ("best_" + stem + ".qasm"));
        }
        write_json_file(spec.output_dir / "summary.json", summary_to_json(summary, spec));
    }
    return summary;
}

}  // namespace qcevo
