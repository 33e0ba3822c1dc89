// Command-line driver: target generation and evolutionary runs.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qcevo/config.hpp"
#include "qcevo/errors.hpp"
#include "qcevo/experiment.hpp"

namespace {

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const auto v = std::stoull(item, &used);
        if (used != item.size()) throw qcevo::ConfigError("bad seed '" + item + "'");
        seeds.push_back(v);
    }
    if (seeds.empty()) throw qcevo::ConfigError("--seeds needs at least one seed");
    return seeds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evolutionary quantum circuit synthesis and depth reduction"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate-target", "Create a random target circuit and its statevector");
    int gen_qubits = 4;
    int gen_depth = 20;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--qubits", gen_qubits, "Number of qubits")->required()->check(CLI::Range(1, 20));
    gen->add_option("--depth", gen_depth, "Circuit depth (>= 2)")->required()->check(CLI::Range(2, 100000));
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_option("--out", gen_out, "Output directory")->required();

    auto* evolve = app.add_subcommand("evolve", "Run the evolutionary algorithm against a target");
    std::string target_dir;
    std::string mode_text = "scratch";
    std::string variant_text = "hybrid";
    std::string seeds_text = "0,1,2,3";
    std::string config_file;
    std::string out_dir;
    bool no_compaction = false;
    int threads = 1;
    std::vector<std::string> overrides;
    evolve->add_option("--target", target_dir, "Directory written by generate-target")->required();
    evolve->add_option("--mode", mode_text, "Initialization mode")->check(CLI::IsMember({"scratch", "target"}));
    evolve->add_option("--variant", variant_text, "Algorithm variant")
        ->check(CLI::IsMember({"hybrid", "ea", "no-ea-ops", "random"}));
    evolve->add_option("--seeds", seeds_text, "Comma-separated seed list");
    evolve->add_option("--config", config_file, "Flat key = value config file");
    evolve->add_option("--out", out_dir, "Output directory")->required();
    evolve->add_flag("--no-compaction", no_compaction, "Disable the compaction subroutine");
    evolve->add_option("--threads", threads, "Seeds run in parallel (1 = byte-identical reruns)")
        ->check(CLI::PositiveNumber);
    evolve->add_option("--set", overrides, "Config override key=value (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const auto target = qcevo::generate_target(gen_qubits, gen_depth, gen_seed);
            qcevo::save_target(target, gen_out);
            std::cout << "wrote " << gen_qubits << "x" << gen_depth << " target to " << gen_out << "\n";
            return 0;
        }

        qcevo::EAConfig config;
        if (!config_file.empty()) qcevo::load_config_file(config, config_file);
        if (evolve->count("--mode") > 0) config.init_mode = *qcevo::parse_init_mode(mode_text);
        if (evolve->count("--variant") > 0) config.variant = *qcevo::parse_variant(variant_text);
        if (no_compaction) config.compaction_enabled = false;
        // --set wins over both the file and the flags.
        for (const auto& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw qcevo::ConfigError("--set expects key=value, got '" + kv + "'");
            qcevo::apply_config_entry(config, kv.substr(0, eq), kv.substr(eq + 1));
        }

        qcevo::ExperimentSpec spec{qcevo::load_target(target_dir), config, parse_seed_list(seeds_text), out_dir,
                                   threads};
        const auto summary = qcevo::run_experiment(spec);
        std::cout << "variant=" << qcevo::to_string(config.variant) << " mode=" << qcevo::to_string(config.init_mode)
                  << " seeds=" << spec.seeds.size() << "\n";
        for (const auto& r : summary.per_seed) {
            std::cout << "  seed " << r.seed << ": fidelity " << r.best_fidelity << ", depth " << r.best_depth
                      << ", reduction " << r.depth_reduction_pct << "%, " << r.wall_time_s << " s\n";
        }
        std::cout << "mean: fidelity " << summary.mean_best_fidelity << ", depth " << summary.mean_best_depth
                  << ", reduction " << summary.mean_depth_reduction_pct << "%\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
