#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcevo/compactor.hpp"
#include "qcevo/experiment.hpp"
#include "qcevo/serialization.hpp"

using namespace qcevo;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("qcevo_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

ExperimentSpec small_spec(const fs::path& out) {
    EAConfig c;
    c.population_size = 16;
    c.generations = 12;
    c.max_optimizer_iterations = 50;
    c.param_opt_interval = 4;
    return ExperimentSpec{generate_target(3, 6, 11), c, {0, 1}, out, 1};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(GenerateTarget, DeterministicPerSeed) {
    const auto a = generate_target(4, 20, 0);
    const auto b = generate_target(4, 20, 0);
    EXPECT_EQ(a.circuit, b.circuit);
    EXPECT_EQ(a.state, b.state);
    EXPECT_NE(generate_target(4, 20, 1).circuit, a.circuit);
}

TEST(GenerateTarget, ShapeAndNorm) {
    const auto t = generate_target(4, 20, 3);
    EXPECT_EQ(t.state.dimension(), 16u);
    EXPECT_NEAR(t.state.norm(), 1.0, 1e-12);
    EXPECT_EQ(t.circuit.depth(), 20);
    const auto big = generate_target(6, 23, 3);
    EXPECT_EQ(big.circuit.num_qubits(), 6);
    EXPECT_EQ(big.circuit.depth(), 23);
    EXPECT_FALSE(validate(big.circuit));
}

TEST(GenerateTarget, AlreadyCompact) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = generate_target(4, 20, seed);
        EXPECT_EQ(compact(t.circuit), t.circuit);
        EXPECT_EQ(fidelity(simulate(t.circuit), t.state), 1.0);
    }
    EXPECT_THROW(generate_target(4, 1, 0), ConfigError);
}

TEST(Target, SaveLoadRoundTrip) {
    const auto dir = scratch_dir("target");
    const auto t = generate_target(4, 12, 9);
    save_target(t, dir);
    for (const char* f : {"target_circuit.json", "target_state.json", "target.json", "target.qasm"}) {
        EXPECT_TRUE(fs::exists(dir / f)) << f;
    }
    const auto loaded = load_target(dir);
    EXPECT_EQ(loaded.circuit, t.circuit);
    EXPECT_EQ(loaded.state, t.state);
    EXPECT_EQ(loaded.depth, 12);
    EXPECT_EQ(loaded.seed, 9u);
    fs::remove_all(dir);
}

TEST(Qasm, AllIdentityColumn) {
    const auto text = to_qasm(SolutionMatrix(2));
    EXPECT_EQ(text, "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nid q[0];\nid q[1];\n");
}

TEST(Qasm, BellPair) {
    SolutionMatrix bell(2, {{GateCell::h(), GateCell::id()}, {GateCell::cx_control(1), GateCell::cx_target(0)}});
    const auto text = to_qasm(bell);
    EXPECT_NE(text.find("h q[0];\ncx q[0],q[1];\n"), std::string::npos);
    EXPECT_EQ(text.find("id"), std::string::npos);
}

TEST(Qasm, RotationAngleAndExportFile) {
    const auto dir = scratch_dir("qasm");
    SolutionMatrix m(1, {{GateCell::rz(1.25)}, {GateCell::sx()}, {GateCell::x()}});
    export_qasm(m, dir / "c.qasm");
    EXPECT_EQ(slurp(dir / "c.qasm"), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nrz(1.25) q[0];\nsx q[0];\nx q[0];\n");
    fs::remove_all(dir);
}

TEST(Csv, HeaderAndRowCount) {
    const auto dir = scratch_dir("csv");
    const auto spec = small_spec(dir);
    run_experiment(spec);
    for (std::uint64_t seed : spec.seeds) {
        const auto lines = lines_of(slurp(dir / ("seed_" + std::to_string(seed) + ".csv")));
        ASSERT_EQ(lines.size(), static_cast<std::size_t>(spec.config.generations + 2));
        EXPECT_EQ(lines[0], "generation,best_fitness,mean_fitness,best_fidelity,best_depth,depth_reduction_pct");
        EXPECT_EQ(lines[1].substr(0, 2), "0,");
    }
    fs::remove_all(dir);
}

TEST(Experiment, SummaryMatchesFinalCsvRow) {
    const auto dir = scratch_dir("summary");
    const auto spec = small_spec(dir);
    const auto summary = run_experiment(spec);
    const auto j = read_json_file(dir / "summary.json");
    ASSERT_EQ(j.at("per_seed").size(), 2u);
    EXPECT_EQ(j.at("seeds"), nlohmann::json::array({0, 1}));
    double mean = 0.0;
    for (const auto& entry : j.at("per_seed")) {
        const auto seed = entry.at("seed").get<std::uint64_t>();
        const auto lines = lines_of(slurp(dir / ("seed_" + std::to_string(seed) + ".csv")));
        std::stringstream row(lines.back());
        std::vector<std::string> fields;
        for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
        ASSERT_EQ(fields.size(), 6u);
        EXPECT_EQ(std::stoi(fields[4]), entry.at("best_depth").get<int>());
        EXPECT_DOUBLE_EQ(std::stod(fields[5]), entry.at("depth_reduction_pct").get<double>());
        EXPECT_DOUBLE_EQ(std::stod(fields[3]), entry.at("best_fidelity").get<double>());
        const int depth = std::stoi(fields[4]);
        EXPECT_DOUBLE_EQ(std::stod(fields[5]), 100.0 * (spec.target.depth - depth) / spec.target.depth);
        mean += entry.at("depth_reduction_pct").get<double>() / 2.0;
        EXPECT_TRUE(fs::exists(dir / ("best_seed_" + std::to_string(seed) + ".json")));
        EXPECT_TRUE(fs::exists(dir / ("best_seed_" + std::to_string(seed) + ".qasm")));
    }
    EXPECT_NEAR(j.at("mean").at("depth_reduction_pct").get<double>(), mean, 1e-12);
    EXPECT_NEAR(summary.mean_depth_reduction_pct, mean, 1e-12);
    fs::remove_all(dir);
}

TEST(Experiment, ByteIdenticalReruns) {
    const auto a = scratch_dir("rerun_a");
    const auto b = scratch_dir("rerun_b");
    run_experiment(small_spec(a));
    auto spec_b = small_spec(b);
    spec_b.threads = 2;  // seeds are independent, so parallel seeds give the same bytes
    run_experiment(spec_b);
    for (const char* f : {"seed_0.csv", "seed_1.csv", "best_seed_0.json"}) EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Experiment, ZeroGenerationsSummarizesInitialPopulation) {
    auto spec = small_spec({});
    spec.config.generations = 0;
    const auto summary = run_experiment(spec);
    for (const auto& r : summary.per_seed) {
        ASSERT_EQ(r.records.size(), 1u);
        EXPECT_EQ(r.best_depth, r.records[0].best_depth);
    }
}

TEST(Experiment, TargetModeNoEaOpsIsStable) {
    auto spec = small_spec({});
    spec.config.init_mode = InitMode::Target;
    spec.config.variant = Variant::NoEaOps;
    const auto summary = run_experiment(spec);
    EXPECT_EQ(summary.mean_best_fidelity, 1.0);
    EXPECT_EQ(summary.mean_depth_reduction_pct, 0.0);
}

TEST(Experiment, RejectsEmptySeedList) {
    auto spec = small_spec({});
    spec.seeds.clear();
    EXPECT_THROW(run_experiment(spec), ConfigError);
}
