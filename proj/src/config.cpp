#include "ramsey/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "ramsey/io.hpp"

namespace ramsey {

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    auto b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

struct GridSpec {
    double start = 0, stop = 0;
    std::size_t steps = 1;
};

GridSpec parse_grid(const std::string& value, const std::string& key) {
    GridSpec g;
    auto c1 = value.find(':');
    if (c1 == std::string::npos) {
        g.start = g.stop = std::stod(value);
        g.steps = 1;
        return g;
    }
    auto c2 = value.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError(key + ": grid must be start:stop:steps");
    g.start = std::stod(value.substr(0, c1));
    g.stop = std::stod(value.substr(c1 + 1, c2 - c1 - 1));
    g.steps = std::stoul(value.substr(c2 + 1));
    if (g.steps < 1) throw ParseError(key + ": grid needs at least one step");
    return g;
}

std::vector<double> geometric_grid(const GridSpec& g, const std::string& key) {
    if (g.start <= 0 || g.stop <= 0)
        throw ParseError(key + ": geometric grid endpoints must be positive");
    std::vector<double> out;
    if (g.steps == 1) return {g.start};
    double ratio = std::pow(g.stop / g.start, 1.0 / static_cast<double>(g.steps - 1));
    for (std::size_t i = 0; i < g.steps; ++i)
        out.push_back(g.start * std::pow(ratio, static_cast<double>(i)));
    out.back() = g.stop; // pin the endpoint against drift
    return out;
}

std::vector<std::size_t> arithmetic_grid(const GridSpec& g) {
    std::vector<std::size_t> out;
    if (g.steps == 1) return {static_cast<std::size_t>(std::llround(g.start))};
    for (std::size_t i = 0; i < g.steps; ++i) {
        double v = g.start + (g.stop - g.start) * static_cast<double>(i) /
                                 static_cast<double>(g.steps - 1);
        out.push_back(static_cast<std::size_t>(std::llround(v)));
    }
    return out;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ParseError(key + ": expected a boolean, got '" + v + "'");
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string& text, const std::string& context) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(context + ": expected 'key = value', line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (kv.count(key))
            throw ParseError(context + ": duplicate key '" + key + "', line " +
                             std::to_string(lineno));
        kv[key] = value;
    }

    ExperimentConfig cfg;
    auto take = [&](const char* key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return "";
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (auto v = take("r"); !v.empty()) cfg.r = std::stoul(v);
    if (auto v = take("n"); !v.empty()) cfg.n = std::stoul(v);
    if (auto v = take("vertex_rule"); !v.empty()) {
        if (v == "rn+t") cfg.vertex_rule = VertexRule::RnPlusT;
        else if (v == "scaled") cfg.vertex_rule = VertexRule::Scaled;
        else throw ParseError(std::string("vertex_rule: unknown rule '") + v + "'");
    }
    if (auto v = take("epsilon"); !v.empty()) cfg.epsilon = std::stod(v);

    std::string p_spec = take("p_grid");
    std::string x_spec = take("x_grid");
    if (!p_spec.empty() && !x_spec.empty())
        throw ParseError(context + ": give p_grid or x_grid, not both");
    if (p_spec.empty() && x_spec.empty())
        throw ParseError(context + ": p_grid or x_grid required");
    if (!p_spec.empty()) {
        cfg.p_grid = geometric_grid(parse_grid(p_spec, "p_grid"), "p_grid");
    } else {
        cfg.grid_was_x = true;
        double scale = std::pow(static_cast<double>(cfg.n),
                                -2.0 / (static_cast<double>(cfg.r) + 1.0));
        for (double x : geometric_grid(parse_grid(x_spec, "x_grid"), "x_grid"))
            cfg.p_grid.push_back(x * scale);
    }
    for (double p : cfg.p_grid)
        if (p < 0.0 || p > 1.0)
            throw ParseError(context + ": grid probability " + std::to_string(p) +
                             " outside [0,1]");

    if (auto v = take("t_grid"); !v.empty()) cfg.t_grid = arithmetic_grid(parse_grid(v, "t_grid"));
    else cfg.t_grid = {0};

    if (auto v = take("trials"); !v.empty()) cfg.trials_per_point = std::stoul(v);
    if (cfg.trials_per_point < 1) throw ParseError(context + ": trials must be >= 1");
    if (auto v = take("master_seed"); !v.empty()) cfg.master_seed = std::stoull(v);
    if (auto v = take("strategies"); !v.empty()) cfg.strategies = split_list(v);
    else cfg.strategies = {"hitting", "boundary", "pinned"};
    for (const auto& s : cfg.strategies)
        if (s != "hitting" && s != "boundary" && s != "pinned" && s != "localsearch" &&
            s != "exact")
            throw ParseError(context + ": unknown strategy '" + s + "'");

    if (auto v = take("verify"); !v.empty()) {
        if (v == "exact") cfg.verify_exact = true;
        else if (v == "heuristic") cfg.verify_exact = false;
        else throw ParseError(context + ": verify must be exact or heuristic");
    }
    if (auto v = take("coupled"); !v.empty()) cfg.coupled = parse_bool(v, "coupled");
    if (auto v = take("alpha"); !v.empty()) cfg.alpha = std::stod(v);
    if (auto v = take("gamma"); !v.empty()) cfg.gamma = std::stod(v);
    if (auto v = take("C_const"); !v.empty()) cfg.c_const = std::stod(v);
    if (auto v = take("omega_multiplier"); !v.empty()) cfg.omega_multiplier = std::stod(v);
    if (auto v = take("budget"); !v.empty()) cfg.budget = std::stoull(v);
    if (auto v = take("cache_dir"); !v.empty()) cfg.cache_dir = v;

    if (!kv.empty())
        throw ParseError(context + ": unknown key '" + kv.begin()->first + "'");

    if (const char* env = std::getenv("RAMSEY_SEED"))
        cfg.master_seed = std::stoull(env);

    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_experiment_config(ss.str(), path);
}

std::string config_cache_salt(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << kCodeVersion << ";r=" << cfg.r << ";n=" << cfg.n
        << ";rule=" << (cfg.vertex_rule == VertexRule::RnPlusT ? "rn+t" : "scaled")
        << ";eps=" << cfg.epsilon << ";verify=" << (cfg.verify_exact ? "exact" : "heuristic")
        << ";coupled=" << cfg.coupled << ";alpha=" << cfg.alpha << ";gamma=" << cfg.gamma
        << ";C=" << cfg.c_const << ";omega=" << cfg.omega_multiplier
        << ";budget=" << cfg.budget << ";strategies=";
    for (const auto& s : cfg.strategies) out << s << ',';
    return out.str();
}

} // namespace ramsey
