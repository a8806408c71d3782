#pragma once

// Reproducible experiment configuration: every CLI run serialises the full
// effective parameter set, and any run can be replayed from that file.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace dqw {

struct ExperimentConfig {
    std::string command;              // walk|search|scan|scaling|spectral|verify
    std::vector<std::int64_t> sides;  // lattice sides (d implied)
    double c = 0.7071067811865476;
    std::int64_t t = 0;               // walk steps (walk command)
    std::string initial = "delta";    // delta|symmetric|symmetric2d|uniform
    std::vector<std::int64_t> delta_site;
    bool absorbing = false;
    int t1 = 3;
    std::int64_t max_calls = 256;
    std::vector<std::int64_t> marked;
    std::vector<double> c_grid;
    std::vector<int> t1_grid;
    std::vector<std::int64_t> side_list; // scaling experiment sizes
    int samples = 1024;                  // dispersion samples
    bool dump_peak = false;
    std::string out_dir = ".";
    std::string format = "csv";
    int threads = 1;
    std::uint64_t seed = 0; // only consumed by randomised property tests

    bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

// The evolve-facing run descriptor:
// {d, sides, c, t, initial, delta_site, absorbing}.
nlohmann::json run_descriptor(const ExperimentConfig& cfg);

} // namespace dqw
