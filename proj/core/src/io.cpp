#include "dqw/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "dqw/spectral.hpp"

namespace dqw::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string cell_to_string(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

nlohmann::json cell_to_json(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    if (const auto* d = std::get_if<double>(&c)) return *d;
    return std::get<std::string>(c);
}

} // namespace

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += t.columns[c];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += cell_to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json to_json_rows(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[t.columns[c]] = cell_to_json(row[c]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << text;
}

void write_table(const std::filesystem::path& dir, const std::string& stem,
                 const Table& t, TableFormat format) {
    if (format == TableFormat::Csv) {
        write_text(dir / (stem + ".csv"), to_csv(t));
    } else {
        write_json(dir / (stem + ".json"), to_json_rows(t));
    }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    write_text(path, j.dump(2) + "\n");
}

Table field_table(const AmplitudeField& f) {
    const LatticeGeometry& g = f.geometry();
    Table t;
    t.columns.push_back("index");
    for (int j = 1; j <= g.dim(); ++j) {
        t.columns.push_back("coord_" + std::to_string(j));
    }
    t.columns.insert(t.columns.end(), {"re", "im", "prob"});
    t.rows.reserve(static_cast<std::size_t>(g.size()));
    for (std::int64_t i = 0; i < g.size(); ++i) {
        std::vector<Cell> row;
        row.reserve(static_cast<std::size_t>(g.dim()) + 4);
        row.emplace_back(i);
        for (const std::int64_t c : g.coords_of(i)) row.emplace_back(c);
        row.emplace_back(f[i].real());
        row.emplace_back(f[i].imag());
        row.emplace_back(std::norm(f[i]));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table distribution_table(const ProbabilityDistribution& p) {
    const LatticeGeometry& g = p.geometry;
    Table t;
    if (g.dim() == 1) {
        t.columns = {"n", "prob"};
        const std::int64_t len = g.side(0);
        for (std::int64_t n = -(len / 2) + 1; n <= len / 2; ++n) {
            t.rows.push_back({Cell{n}, Cell{p.probs[ring_index_1d(g, n)]}});
        }
    } else if (g.dim() == 2) {
        t.columns = {"x", "y", "prob"};
        for (std::int64_t i = 0; i < g.size(); ++i) {
            const auto c = g.coords_of(i);
            t.rows.push_back({Cell{c[0]}, Cell{c[1]}, Cell{p.probs[i]}});
        }
    } else {
        t.columns = {"index", "prob"};
        for (std::int64_t i = 0; i < g.size(); ++i) {
            t.rows.push_back({Cell{i}, Cell{p.probs[i]}});
        }
    }
    return t;
}

Table trace_table(const SearchTrace& trace) {
    Table t;
    t.columns = {"call", "total_steps", "p_marked"};
    for (const auto& pt : trace.points) {
        t.rows.push_back({Cell{pt.call}, Cell{pt.total_steps}, Cell{pt.p_marked}});
    }
    return t;
}

Table scan_table(const std::vector<ScanRow>& rows) {
    Table t;
    t.columns = {"c", "t1", "peak_call", "peak_prob", "total_steps"};
    for (const auto& r : rows) {
        t.rows.push_back({Cell{r.c},
                          Cell{static_cast<std::int64_t>(r.t1)},
                          Cell{r.found ? r.peak_call : std::int64_t{-1}},
                          Cell{r.found ? r.peak_prob : 0.0},
                          Cell{r.found ? r.total_steps : std::int64_t{-1}}});
    }
    return t;
}

Table dispersion_table(int samples) {
    if (samples < 2) {
        throw InputError("dispersion table needs at least two samples");
    }
    Table t;
    t.columns = {"k", "omega", "re_lambda_plus", "im_lambda_plus"};
    for (int j = 0; j < samples; ++j) {
        const double k = -std::numbers::pi +
                         2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(samples - 1);
        const double w = dispersion(k);
        t.rows.push_back({Cell{k}, Cell{w}, Cell{std::cos(w)}, Cell{std::sin(w)}});
    }
    return t;
}

Table density_compare_table(const ProbabilityDistribution& p, std::int64_t t) {
    const LatticeGeometry& g = p.geometry;
    if (g.dim() != 1) {
        throw InputError("density comparison requires a 1-D lattice");
    }
    Table out;
    out.columns = {"n", "p_empirical", "p_smooth"};
    const std::int64_t len = g.side(0);
    const double edge = std::numbers::sqrt2 * static_cast<double>(t);
    for (std::int64_t n = -(len / 2) + 1; n <= len / 2; ++n) {
        const double shifted = static_cast<double>(n) - 0.5;
        if (std::abs(shifted) >= edge) continue;
        out.rows.push_back({Cell{n}, Cell{p.probs[ring_index_1d(g, n)]},
                            Cell{smooth_density(shifted, t)}});
    }
    return out;
}

nlohmann::json fit_to_json(const ScalingFit& fit) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : fit.samples) {
        samples.push_back({{"n_sites", s.n_sites},
                           {"peak_prob", s.peak_prob},
                           {"peak_calls", s.peak_calls},
                           {"total_steps", s.total_steps}});
    }
    return nlohmann::json{{"d", fit.dim},
                          {"form_prob", fit.form_prob},
                          {"form_steps", fit.form_steps},
                          {"a_prob", fit.a_prob},
                          {"a_steps", fit.a_steps},
                          {"a_steps_walk", fit.a_steps_walk},
                          {"residual_prob", fit.residual_prob},
                          {"residual_steps", fit.residual_steps},
                          {"underdetermined", fit.underdetermined},
                          {"samples", std::move(samples)}};
}

} // namespace dqw::io
