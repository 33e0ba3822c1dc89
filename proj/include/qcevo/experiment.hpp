#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "qcevo/config.hpp"
#include "qcevo/evolution.hpp"

namespace qcevo {

/// A randomly generated benchmark circuit and the state it prepares.
struct TargetInstance {
    SolutionMatrix circuit;
    Statevector state;
    int depth;
    std::uint64_t seed;

    Target as_target() const { return Target{state, depth, circuit}; }
};

/// Random circuit of exactly `depth` columns over `gate_set`, grown column by
/// column until its compacted form reaches `depth`; the stored circuit is
/// that compacted form, so the compactor cannot shorten it further.
TargetInstance generate_target(int num_qubits, int depth, std::uint64_t seed,
                               const GateSet& gate_set = default_gate_set());

/// Files written: target_circuit.json, target_state.json, target.qasm and
/// target.json (qubits, depth, seed).
void save_target(const TargetInstance& target, const std::filesystem::path& dir);
TargetInstance load_target(const std::filesystem::path& dir);

inline constexpr const char* kCsvHeader =
    "generation,best_fitness,mean_fitness,best_fidelity,best_depth,depth_reduction_pct";

std::string records_to_csv(const std::vector<GenerationRecord>& records);

struct SeedResult {
    std::uint64_t seed = 0;
    std::vector<GenerationRecord> records;
    SolutionMatrix best_solution{1};
    double best_fidelity = 0.0;
    int best_depth = 0;
    double depth_reduction_pct = 0.0;
    double wall_time_s = 0.0;
};

/// Runs one seed to completion. `config.seed` is overwritten with `seed`.
SeedResult run_seed(const Target& target, EAConfig config, std::uint64_t seed);

struct ExperimentSpec {
    TargetInstance target;
    EAConfig config;
    std::vector<std::uint64_t> seeds;
    std::filesystem::path output_dir;  // empty: keep results in memory only
    int threads = 1;
};

struct ExperimentSummary {
    std::vector<SeedResult> per_seed;
    double mean_best_fidelity = 0.0;
    double mean_best_depth = 0.0;
    double mean_depth_reduction_pct = 0.0;
    double mean_wall_time_s = 0.0;
};

nlohmann::json config_to_json(const EAConfig& config);
nlohmann::json summary_to_json(const ExperimentSummary& summary, const ExperimentSpec& spec);

/// Runs every seed (in parallel up to `threads`), then writes seed_<s>.csv,
/// best_seed_<s>.json, best_seed_<s>.qasm and summary.json to the output
/// directory when one is set.
ExperimentSummary run_experiment(const ExperimentSpec& spec);

}  // namespace qcevo
