#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

inline constexpr const char* kCodeVersion = "ramsey-0.1.0";

enum class VertexRule { RnPlusT, Scaled };

// Flat key = value experiment description. Grids arrive as start:stop:steps
// (geometric for p and x, arithmetic for t); lists are comma-separated.
struct ExperimentConfig {
    std::size_t r = 2;
    std::size_t n = 1;
    VertexRule vertex_rule = VertexRule::RnPlusT;
    double epsilon = 0.1; // scaled rule: N = ceil((1+eps) r n)

    std::vector<double> p_grid;      // resolved probabilities (from p or x grid)
    std::vector<std::size_t> t_grid; // excess-vertex grid
    bool grid_was_x = false;

    std::size_t trials_per_point = 1;
    std::uint64_t master_seed = 0;

    std::vector<std::string> strategies; // hitting | boundary | pinned | localsearch | exact
    bool verify_exact = true;
    bool coupled = false; // share per-pair uniforms along the p-grid

    double alpha = 0.0625;
    double gamma = 0.0009765625;
    double c_const = 1024.0;
    double omega_multiplier = 1.0;
    std::uint64_t budget = 50'000'000; // node budget for exact arrow

    std::string cache_dir; // empty: <out>/cache
};

// Parses the file and applies the RAMSEY_SEED environment override.
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig parse_experiment_config(const std::string& text, const std::string& context);

// Canonical serialisation of everything that identifies a trial's inputs;
// the results cache hashes this.
std::string config_cache_salt(const ExperimentConfig& cfg);

} // namespace ramsey
