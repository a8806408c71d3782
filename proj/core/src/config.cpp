#include "dqw/config.hpp"

#include <nlohmann/json.hpp>

namespace dqw {

nlohmann::json to_json(const ExperimentConfig& cfg) {
    return nlohmann::json{{"command", cfg.command},
                          {"sides", cfg.sides},
                          {"c", cfg.c},
                          {"t", cfg.t},
                          {"initial", cfg.initial},
                          {"delta_site", cfg.delta_site},
                          {"absorbing", cfg.absorbing},
                          {"t1", cfg.t1},
                          {"max_calls", cfg.max_calls},
                          {"marked", cfg.marked},
                          {"c_grid", cfg.c_grid},
                          {"t1_grid", cfg.t1_grid},
                          {"side_list", cfg.side_list},
                          {"samples", cfg.samples},
                          {"dump_peak", cfg.dump_peak},
                          {"out_dir", cfg.out_dir},
                          {"format", cfg.format},
                          {"threads", cfg.threads},
                          {"seed", cfg.seed}};
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    j.at("command").get_to(cfg.command);
    j.at("sides").get_to(cfg.sides);
    j.at("c").get_to(cfg.c);
    j.at("t").get_to(cfg.t);
    j.at("initial").get_to(cfg.initial);
    j.at("delta_site").get_to(cfg.delta_site);
    j.at("absorbing").get_to(cfg.absorbing);
    j.at("t1").get_to(cfg.t1);
    j.at("max_calls").get_to(cfg.max_calls);
    j.at("marked").get_to(cfg.marked);
    j.at("c_grid").get_to(cfg.c_grid);
    j.at("t1_grid").get_to(cfg.t1_grid);
    j.at("side_list").get_to(cfg.side_list);
    j.at("samples").get_to(cfg.samples);
    j.at("dump_peak").get_to(cfg.dump_peak);
    j.at("out_dir").get_to(cfg.out_dir);
    j.at("format").get_to(cfg.format);
    j.at("threads").get_to(cfg.threads);
    j.at("seed").get_to(cfg.seed);
    return cfg;
}

nlohmann::json run_descriptor(const ExperimentConfig& cfg) {
    return nlohmann::json{{"d", cfg.sides.size()},
                          {"sides", cfg.sides},
                          {"c", cfg.c},
                          {"t", cfg.t},
                          {"initial", cfg.initial},
                          {"delta_site", cfg.delta_site},
                          {"absorbing", cfg.absorbing}};
}

} // namespace dqw
