// dqw: command-line driver for the coinless discrete-time quantum walk
// simulator. Subcommands: walk, search, scan, scaling, spectral, verify.
// Exit codes: 0 success, 1 runtime/experiment failure, 2 invalid input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dqw/config.hpp"
#include "dqw/evolve.hpp"
#include "dqw/io.hpp"
#include "dqw/observables.hpp"
#include "dqw/search.hpp"
#include "dqw/spectral.hpp"
#include "verify_suite.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

dqw::io::TableFormat table_format(const dqw::ExperimentConfig& cfg) {
    if (cfg.format == "csv") return dqw::io::TableFormat::Csv;
    if (cfg.format == "json") return dqw::io::TableFormat::Json;
    throw dqw::InputError("unknown format '" + cfg.format + "' (want csv or json)");
}

dqw::LatticeGeometry geometry_from(const dqw::ExperimentConfig& cfg) {
    return dqw::LatticeGeometry(cfg.sides);
}

void ensure_out_dir(const dqw::ExperimentConfig& cfg) {
    fs::create_directories(cfg.out_dir);
}

void write_config(const dqw::ExperimentConfig& cfg) {
    dqw::io::write_json(fs::path(cfg.out_dir) / "config.json", dqw::to_json(cfg));
}

dqw::AmplitudeField initial_state(const dqw::ExperimentConfig& cfg,
                                  const dqw::LatticeGeometry& g) {
    if (cfg.initial == "delta") {
        std::vector<std::int64_t> site = cfg.delta_site;
        if (site.empty()) site.assign(static_cast<std::size_t>(g.dim()), 0);
        return dqw::init_delta(g, site);
    }
    if (cfg.initial == "symmetric") {
        return dqw::init_symmetric_1d(g);
    }
    if (cfg.initial == "symmetric2d") {
        if (g.dim() != 2) {
            throw dqw::InputError("symmetric2d requires a 2-D lattice");
        }
        return dqw::init_symmetric_diagonal(g);
    }
    if (cfg.initial == "uniform") {
        return dqw::init_uniform(g);
    }
    throw dqw::InputError("unknown initial state '" + cfg.initial + "'");
}

int cmd_walk(const dqw::ExperimentConfig& cfg) {
    const auto g = geometry_from(cfg);
    const auto fmt = table_format(cfg);
    ensure_out_dir(cfg);

    dqw::WalkEngine engine(g, dqw::MixingParams::from_c(cfg.c), cfg.threads);
    dqw::AmplitudeField psi = initial_state(cfg, g);

    json summary;
    summary["t"] = cfg.t;
    if (cfg.absorbing) {
        dqw::AbsorbingWalkState state(std::move(psi)); // rejects d != 1
        dqw::io::Table series;
        series.columns = {"t", "p_abs"};
        for (std::int64_t t = 1; t <= cfg.t; ++t) {
            state.step(engine);
            series.rows.push_back({dqw::io::Cell{t}, dqw::io::Cell{state.absorbed()}});
        }
        dqw::io::write_table(cfg.out_dir, "walk_absorption", series, fmt);
        psi = state.field();
        summary["p_abs"] = state.absorbed();
    } else {
        psi = engine.run(std::move(psi), cfg.t);
    }
    summary["norm"] = psi.norm_sq();

    dqw::io::write_table(cfg.out_dir, "walk_field", dqw::io::field_table(psi), fmt);
    dqw::io::write_table(cfg.out_dir, "walk_distribution",
                         dqw::io::distribution_table(dqw::distribution(psi)), fmt);
    dqw::io::write_json(fs::path(cfg.out_dir) / "walk_summary.json", summary);
    dqw::io::write_json(fs::path(cfg.out_dir) / "walk_descriptor.json",
                        dqw::run_descriptor(cfg));
    write_config(cfg);
    return 0;
}

int cmd_search(const dqw::ExperimentConfig& cfg) {
    const auto g = geometry_from(cfg);
    const auto fmt = table_format(cfg);
    ensure_out_dir(cfg);

    dqw::SearchConfig scfg{g};
    scfg.c = cfg.c;
    scfg.t1 = cfg.t1;
    scfg.max_calls = cfg.max_calls;
    scfg.marked = cfg.marked;
    scfg.threads = cfg.threads;

    const dqw::SearchTrace trace = dqw::search_run(scfg);
    dqw::io::write_table(cfg.out_dir, "search_trace", dqw::io::trace_table(trace), fmt);
    write_config(cfg);

    json summary;
    summary["d"] = g.dim();
    summary["sides"] = g.sides();
    summary["c"] = cfg.c;
    summary["t1"] = cfg.t1;
    summary["max_calls"] = cfg.max_calls;
    summary["marked"] = scfg.marked_or_origin();

    try {
        const auto peak = dqw::detect_first_peak(trace);
        summary["found"] = true;
        summary["peak_call"] = peak.call;
        summary["peak_prob"] = peak.probability;
        summary["total_steps"] = peak.call * cfg.t1;
        summary["detector"] = {{"window", peak.window}, {"rel_floor", peak.rel_floor}};
    } catch (const dqw::PeakNotFoundError& e) {
        summary["found"] = false;
        summary["error"] = e.what();
        dqw::io::write_json(fs::path(cfg.out_dir) / "search_summary.json", summary);
        std::cerr << "dqw search: " << e.what() << "\n";
        return 1;
    }
    dqw::io::write_json(fs::path(cfg.out_dir) / "search_summary.json", summary);

    if (cfg.dump_peak) {
        // replay up to the peak call and dump the field there
        dqw::WalkEngine engine(g, dqw::MixingParams::from_c(cfg.c), cfg.threads);
        dqw::AmplitudeField psi = dqw::init_uniform(g);
        const auto marked = scfg.marked_or_origin();
        const std::int64_t peak_call = summary["peak_call"];
        for (std::int64_t call = 0; call < peak_call; ++call) {
            dqw::reflect_marked(psi, marked);
            for (int s = 0; s < cfg.t1; ++s) engine.step(psi);
        }
        dqw::io::write_table(cfg.out_dir, "search_peak_field",
                             dqw::io::field_table(psi), fmt);
        dqw::io::write_table(cfg.out_dir, "search_peak_distribution",
                             dqw::io::distribution_table(dqw::distribution(psi)), fmt);
    }
    return 0;
}

int cmd_scan(const dqw::ExperimentConfig& cfg) {
    const auto g = geometry_from(cfg);
    const auto fmt = table_format(cfg);
    ensure_out_dir(cfg);

    const auto rows = dqw::scan_parameters(g, cfg.c_grid, cfg.t1_grid,
                                           cfg.max_calls, cfg.threads);
    dqw::io::write_table(cfg.out_dir, "scan_table", dqw::io::scan_table(rows), fmt);
    write_config(cfg);

    json summary;
    summary["rows"] = rows.size();
    std::size_t found = 0;
    for (const auto& r : rows) found += r.found ? 1 : 0;
    summary["rows_found"] = found;
    if (!rows.empty() && rows.front().best) {
        summary["best"] = {{"c", rows.front().c},
                           {"t1", rows.front().t1},
                           {"peak_call", rows.front().peak_call},
                           {"peak_prob", rows.front().peak_prob},
                           {"total_steps", rows.front().total_steps}};
    }
    dqw::io::write_json(fs::path(cfg.out_dir) / "scan_summary.json", summary);
    if (found == 0) {
        std::cerr << "dqw scan: no grid point produced a detectable peak\n";
        return 1;
    }
    return 0;
}

int cmd_scaling(const dqw::ExperimentConfig& cfg) {
    const auto fmt = table_format(cfg);
    ensure_out_dir(cfg);

    const int d = static_cast<int>(cfg.sides.size());
    const auto fit =
        dqw::scaling_experiment(d, cfg.side_list, cfg.c, cfg.t1, cfg.threads);

    dqw::io::Table samples;
    samples.columns = {"n_sites", "peak_prob", "peak_calls", "total_steps"};
    for (const auto& s : fit.samples) {
        samples.rows.push_back({dqw::io::Cell{s.n_sites}, dqw::io::Cell{s.peak_prob},
                                dqw::io::Cell{s.peak_calls}, dqw::io::Cell{s.total_steps}});
    }
    dqw::io::write_table(cfg.out_dir, "scaling_samples", samples, fmt);
    dqw::io::write_json(fs::path(cfg.out_dir) / "scaling_fit.json",
                        dqw::io::fit_to_json(fit));
    write_config(cfg);
    return 0;
}

int cmd_spectral(const dqw::ExperimentConfig& cfg) {
    const auto fmt = table_format(cfg);
    ensure_out_dir(cfg);

    dqw::io::write_table(cfg.out_dir, "dispersion",
                         dqw::io::dispersion_table(cfg.samples), fmt);

    if (cfg.t > 0) {
        const dqw::LatticeGeometry g({cfg.sides.at(0)});
        dqw::WalkEngine engine(g, dqw::MixingParams::unbiased(), cfg.threads);
        const auto psi = engine.run(dqw::init_symmetric_1d(g), cfg.t);
        dqw::io::write_table(
            cfg.out_dir, "density_compare",
            dqw::io::density_compare_table(dqw::distribution(psi), cfg.t), fmt);
    }
    write_config(cfg);
    return 0;
}

int cmd_verify(const dqw::ExperimentConfig& cfg, bool dump_blocks) {
    ensure_out_dir(cfg);
    const auto results = dqw::tools::run_verify_suite();

    json report = json::array();
    std::size_t failures = 0;
    std::printf("%-55s %s\n", "check", "result");
    for (const auto& r : results) {
        std::printf("%-55s %s  (%s)\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
        if (!r.pass) ++failures;
        report.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    std::printf("%zu/%zu checks passed\n", results.size() - failures, results.size());
    dqw::io::write_json(fs::path(cfg.out_dir) / "verify_report.json", report);

    if (dump_blocks) {
        for (int d = 1; d <= 3; ++d) {
            for (const dqw::Parity parity : {dqw::Parity::Odd, dqw::Parity::Even}) {
                const auto u = dqw::exponentiate_block(
                    dqw::build_block_hamiltonian(d, parity),
                    dqw::MixingParams::from_c(cfg.c));
                const std::string name = "block_d" + std::to_string(d) + "_" +
                                         dqw::to_string(parity) + ".json";
                dqw::io::write_json(fs::path(cfg.out_dir) / name,
                                    dqw::block_to_json(u, parity));
            }
        }
    }
    write_config(cfg);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coinless discrete-time quantum walk simulator"};
    app.require_subcommand(1);

    dqw::ExperimentConfig cfg;
    int dim = 1;
    std::int64_t side = 0;
    bool dump_blocks = false;
    std::string config_path;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--threads", cfg.threads, "worker thread cap");
        sub->add_option("--format", cfg.format, "table output format: csv|json");
        sub->add_option("--seed", cfg.seed, "seed recorded for reproducibility");
        sub->add_option("--config", config_path,
                        "load a config.json written by an earlier run");
    };
    const auto add_geometry = [&](CLI::App* sub) {
        sub->add_option("--d", dim, "lattice dimension");
        sub->add_option("--L", side, "side length (hypercube)");
        sub->add_option("--sides", cfg.sides, "explicit side lengths")
            ->delimiter(',');
    };

    auto* walk = app.add_subcommand("walk", "evolve a walk and dump the state");
    add_common(walk);
    add_geometry(walk);
    walk->add_option("--t", cfg.t, "walk steps");
    walk->add_option("--c", cfg.c, "mixing parameter");
    walk->add_option("--init", cfg.initial, "delta|symmetric|symmetric2d|uniform");
    walk->add_option("--delta-site", cfg.delta_site, "delta position")->delimiter(',');
    walk->add_flag("--absorbing", cfg.absorbing, "absorbing wall left of n=0 (1-D)");

    auto* search = app.add_subcommand("search", "marked-vertex search run");
    add_common(search);
    add_geometry(search);
    search->add_option("--c", cfg.c, "mixing parameter");
    search->add_option("--t1", cfg.t1, "walk steps per oracle call");
    search->add_option("--max-calls", cfg.max_calls, "oracle call cap");
    search->add_option("--marked", cfg.marked, "marked vertex")->delimiter(',');
    search->add_flag("--dump-peak", cfg.dump_peak, "dump the field at the peak");

    auto* scan = app.add_subcommand("scan", "grid scan over (c, t1)");
    add_common(scan);
    add_geometry(scan);
    scan->add_option("--c-grid", cfg.c_grid, "c values")->delimiter(',');
    scan->add_option("--t1-grid", cfg.t1_grid, "t1 values")->delimiter(',');
    scan->add_option("--max-calls", cfg.max_calls, "oracle call cap");

    auto* scaling = app.add_subcommand("scaling", "peak scaling versus lattice size");
    add_common(scaling);
    scaling->add_option("--d", dim, "lattice dimension");
    scaling->add_option("--sides", cfg.side_list, "side lengths to sweep")
        ->delimiter(',');
    scaling->add_option("--c", cfg.c, "mixing parameter");
    scaling->add_option("--t1", cfg.t1, "walk steps per oracle call");

    auto* spectral = app.add_subcommand("spectral", "dispersion and density tables");
    add_common(spectral);
    spectral->add_option("--samples", cfg.samples, "dispersion sample count");
    spectral->add_option("--t", cfg.t, "density comparison walk time (0 = skip)");
    spectral->add_option("--L", side, "density comparison ring length");

    auto* verify = app.add_subcommand("verify", "run the invariant self-checks");
    add_common(verify);
    verify->add_flag("--dump-blocks", dump_blocks, "write block unitary JSON dumps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();

        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw dqw::InputError("cannot read config " + config_path);
            json j;
            in >> j;
            const std::string out_dir = cfg.out_dir; // CLI out dir wins
            const std::string command = cfg.command;
            cfg = dqw::experiment_config_from_json(j);
            cfg.out_dir = out_dir;
            if (cfg.command != command) {
                throw dqw::InputError("config file was written by '" + cfg.command +
                                      "', not '" + command + "'");
            }
        } else if (cfg.command == "walk" || cfg.command == "search" ||
                   cfg.command == "scan") {
            if (cfg.sides.empty()) {
                if (side <= 0) {
                    throw dqw::InputError("provide --L or --sides");
                }
                cfg.sides.assign(static_cast<std::size_t>(dim), side);
            }
        } else if (cfg.command == "scaling") {
            if (cfg.side_list.empty()) {
                throw dqw::InputError("provide --sides for the scaling sweep");
            }
            cfg.sides.assign(static_cast<std::size_t>(dim), cfg.side_list.front());
        } else if (cfg.command == "spectral") {
            cfg.sides = {side > 0 ? side : 256};
        }

        if (cfg.command == "walk") return cmd_walk(cfg);
        if (cfg.command == "search") return cmd_search(cfg);
        if (cfg.command == "scan") return cmd_scan(cfg);
        if (cfg.command == "scaling") return cmd_scaling(cfg);
        if (cfg.command == "spectral") return cmd_spectral(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg, dump_blocks);
        throw dqw::InputError("unknown command");
    } catch (const dqw::InputError& e) {
        std::cerr << "dqw: " << e.what() << "\n";
        return 2;
    } catch (const dqw::DomainError& e) {
        std::cerr << "dqw: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dqw: " << e.what() << "\n";
        return 1;
    }
}
