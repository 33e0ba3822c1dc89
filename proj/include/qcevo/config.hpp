#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qcevo/gate.hpp"

namespace qcevo {

enum class InitMode { Scratch, Target };

enum class Variant {
    Hybrid,          // EA operators + periodic angle optimization
    EaOnly,          // EA operators only
    NoEaOps,         // angle optimization only; children are parent clones
    RandomBaseline,  // fresh random circuits each generation, best-so-far tracked
};

inline constexpr std::size_t kMutationKindCount = 8;

/// Hyperparameters. Defaults reproduce the published experiment settings.
struct EAConfig {
    int population_size = 200;
    int generations = 1000;
    double crossover_rate = 0.85;
    double mutation_rate = 0.85;
    double offspring_rate = 0.3;
    double replace_rate = 0.3;
    GateSet gate_set = default_gate_set();

    // Objective-evaluation budget per optimize() call.
    int max_optimizer_iterations = 1000;
    double optimizer_initial_step = 0.5;
    double optimizer_tolerance = 1e-6;

    double alpha = 10.0;
    double beta = 1.0;

    int param_opt_interval = 25;
    double param_opt_fraction = 0.1;

    // Scratch-mode initial depth range; 0 for the upper bound means "target depth".
    int init_depth_min = 2;
    int init_depth_max = 0;

    // Relative weights over MutationKind, in enum order.
    std::array<double, kMutationKindCount> mutation_weights{1, 1, 1, 1, 1, 1, 1, 1};

    InitMode init_mode = InitMode::Scratch;
    Variant variant = Variant::Hybrid;
    bool compaction_enabled = true;
    std::uint64_t seed = 0;

    /// Throws ConfigError on the first out-of-range field.
    void validate() const;

    /// Number of children created per generation, round(offspring_rate × population_size).
    int offspring_count() const;
    /// Number of incumbents replaced per generation, round(replace_rate × population_size).
    int replace_count() const;
    /// ceil(param_opt_fraction × population_size).
    int param_opt_count() const;

    /// Compaction is never applied by the random baseline.
    bool compaction_active() const { return compaction_enabled && variant != Variant::RandomBaseline; }
};

std::string_view to_string(InitMode mode) noexcept;
std::string_view to_string(Variant variant) noexcept;
/// Accepts "scratch" / "target".
std::optional<InitMode> parse_init_mode(std::string_view text) noexcept;
/// Accepts the CLI spellings (hybrid, ea, no-ea-ops, random) and the
/// snake_case names (ea_only, no_ea_ops, random_baseline).
std::optional<Variant> parse_variant(std::string_view text) noexcept;

/// Sets one field from its textual value. Keys are the EAConfig field names.
/// Throws ConfigError for unknown keys or unparsable values.
void apply_config_entry(EAConfig& config, std::string_view key, std::string_view value);

/// Applies a flat `key = value` file (TOML-style: `#` comments, optional
/// quotes, comma-separated lists) on top of `config`.
void load_config_file(EAConfig& config, const std::filesystem::path& path);

}  // namespace qcevo
