#include "qcevo/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "qcevo/errors.hpp"

namespace qcevo {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::vector<std::string_view> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = unquote(s.substr(0, comma));
        if (!item.empty()) out.push_back(item);
        if (comma == std::string_view::npos) break;
        s = s.substr(comma + 1);
    }
    return out;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(value) + "'");
}

double parse_double(std::string_view key, std::string_view text) {
    const std::string s(unquote(text));
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        bad_value(key, text);
    }
    if (used != s.size()) bad_value(key, text);
    return v;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view text) {
    const auto s = unquote(text);
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) bad_value(key, text);
    return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
    const auto s = unquote(text);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    bad_value(key, text);
}

using Setter = std::function<void(EAConfig&, std::string_view key, std::string_view value)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table{
        {"population_size", [](EAConfig& c, auto k, auto v) { c.population_size = parse_int<int>(k, v); }},
        {"generations", [](EAConfig& c, auto k, auto v) { c.generations = parse_int<int>(k, v); }},
        {"crossover_rate", [](EAConfig& c, auto k, auto v) { c.crossover_rate = parse_double(k, v); }},
        {"mutation_rate", [](EAConfig& c, auto k, auto v) { c.mutation_rate = parse_double(k, v); }},
        {"offspring_rate", [](EAConfig& c, auto k, auto v) { c.offspring_rate = parse_double(k, v); }},
        {"replace_rate", [](EAConfig& c, auto k, auto v) { c.replace_rate = parse_double(k, v); }},
        {"gate_set",
         [](EAConfig& c, auto k, auto v) {
             GateSet gates;
             for (auto name : split_list(v)) {
                 auto g = parse_basis_gate(name);
                 if (!g) bad_value(k, v);
                 gates.push_back(*g);
             }
             c.gate_set = std::move(gates);
         }},
        {"max_optimizer_iterations",
         [](EAConfig& c, auto k, auto v) { c.max_optimizer_iterations = parse_int<int>(k, v); }},
        {"optimizer_initial_step", [](EAConfig& c, auto k, auto v) { c.optimizer_initial_step = parse_double(k, v); }},
        {"optimizer_tolerance", [](EAConfig& c, auto k, auto v) { c.optimizer_tolerance = parse_double(k, v); }},
        {"alpha", [](EAConfig& c, auto k, auto v) { c.alpha = parse_double(k, v); }},
        {"beta", [](EAConfig& c, auto k, auto v) { c.beta = parse_double(k, v); }},
        {"param_opt_interval", [](EAConfig& c, auto k, auto v) { c.param_opt_interval = parse_int<int>(k, v); }},
        {"param_opt_fraction", [](EAConfig& c, auto k, auto v) { c.param_opt_fraction = parse_double(k, v); }},
        {"init_depth_min", [](EAConfig& c, auto k, auto v) { c.init_depth_min = parse_int<int>(k, v); }},
        {"init_depth_max", [](EAConfig& c, auto k, auto v) { c.init_depth_max = parse_int<int>(k, v); }},
        {"mutation_weights",
         [](EAConfig& c, auto k, auto v) {
             const auto items = split_list(v);
             if (items.size() != kMutationKindCount) bad_value(k, v);
             for (std::size_t i = 0; i < items.size(); ++i) c.mutation_weights[i] = parse_double(k, items[i]);
         }},
        {"init_mode",
         [](EAConfig& c, auto k, auto v) {
             auto m = parse_init_mode(unquote(v));
             if (!m) bad_value(k, v);
             c.init_mode = *m;
         }},
        {"variant",
         [](EAConfig& c, auto k, auto v) {
             auto m = parse_variant(unquote(v));
             if (!m) bad_value(k, v);
             c.variant = *m;
         }},
        {"compaction_enabled", [](EAConfig& c, auto k, auto v) { c.compaction_enabled = parse_bool(k, v); }},
        {"seed", [](EAConfig& c, auto k, auto v) { c.seed = parse_int<std::uint64_t>(k, v); }},
    };
    return table;
}

}  // namespace

void EAConfig::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError("EAConfig: " + msg); };
    if (population_size < 2) fail("population_size must be >= 2");
    if (generations < 0) fail("generations must be >= 0");
    if (!in_unit_interval(crossover_rate)) fail("crossover_rate must be in [0, 1]");
    if (!in_unit_interval(mutation_rate)) fail("mutation_rate must be in [0, 1]");
    if (!in_unit_interval(offspring_rate)) fail("offspring_rate must be in [0, 1]");
    if (!in_unit_interval(replace_rate)) fail("replace_rate must be in [0, 1]");
    if (!in_unit_interval(param_opt_fraction)) fail("param_opt_fraction must be in [0, 1]");
    if (gate_set.empty()) fail("gate_set must not be empty");
    if (max_optimizer_iterations < 1) fail("max_optimizer_iterations must be >= 1");
    if (!(optimizer_initial_step > 0.0)) fail("optimizer_initial_step must be > 0");
    if (!(optimizer_tolerance >= 0.0)) fail("optimizer_tolerance must be >= 0");
    if (!(alpha > 0.0) || !(beta > 0.0)) fail("alpha and beta must be > 0");
    if (param_opt_interval < 1) fail("param_opt_interval must be >= 1");
    if (init_depth_min < 1) fail("init_depth_min must be >= 1");
    if (init_depth_max != 0 && init_depth_max < init_depth_min) fail("init_depth_max must be >= init_depth_min");
    double weight_sum = 0.0;
    for (double w : mutation_weights) {
        if (!(w >= 0.0)) fail("mutation_weights must be non-negative");
        weight_sum += w;
    }
    if (!(weight_sum > 0.0)) fail("mutation_weights must not all be zero");
    if (replace_count() > offspring_count()) fail("replace_rate exceeds offspring_rate (n > m)");
    if (replace_count() >= population_size) fail("replace_rate would replace the whole population");
}

int EAConfig::offspring_count() const { return static_cast<int>(std::lround(offspring_rate * population_size)); }

int EAConfig::replace_count() const { return static_cast<int>(std::lround(replace_rate * population_size)); }

int EAConfig::param_opt_count() const {
    return static_cast<int>(std::ceil(param_opt_fraction * population_size - 1e-9));
}

std::string_view to_string(InitMode mode) noexcept { return mode == InitMode::Scratch ? "scratch" : "target"; }

std::string_view to_string(Variant variant) noexcept {
    switch (variant) {
        case Variant::Hybrid: return "hybrid";
        case Variant::EaOnly: return "ea";
        case Variant::NoEaOps: return "no-ea-ops";
        case Variant::RandomBaseline: return "random";
    }
    return "?";
}

std::optional<InitMode> parse_init_mode(std::string_view text) noexcept {
    if (text == "scratch") return InitMode::Scratch;
    if (text == "target") return InitMode::Target;
    return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view text) noexcept {
    if (text == "hybrid") return Variant::Hybrid;
    if (text == "ea" || text == "ea_only") return Variant::EaOnly;
    if (text == "no-ea-ops" || text == "no_ea_ops") return Variant::NoEaOps;
    if (text == "random" || text == "random_baseline") return Variant::RandomBaseline;
    return std::nullopt;
}

void apply_config_entry(EAConfig& config, std::string_view key, std::string_view value) {
    const auto& table = setters();
    const auto it = table.find(trim(key));
    if (it == table.end()) throw ConfigError("unknown config key '" + std::string(key) + "'");
    it->second(config, trim(key), value);
}

void load_config_file(EAConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        // Comments may not appear inside quoted values; none of the keys need '#'.
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty() || view.front() == '[') continue;  // blank line or table header
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            std::ostringstream msg;
            msg << path.string() << ":" << line_no << ": expected key = value";
            throw ConfigError(msg.str());
        }
        apply_config_entry(config, view.substr(0, eq), view.substr(eq + 1));
    }
}

}  // namespace qcevo
