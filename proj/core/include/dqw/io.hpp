#pragma once

// Stable output schemas: tabular data writable as CSV or JSON rows, and the
// JSON summaries. All floating-point output is printed with %.17g so equal
// results are byte-equal files.

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dqw/lattice.hpp"
#include "dqw/observables.hpp"
#include "dqw/search.hpp"

namespace dqw::io {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class TableFormat { Csv, Json };

// round-trip-exact decimal rendering of a double
std::string format_double(double v);

std::string to_csv(const Table& t);
nlohmann::json to_json_rows(const Table& t);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_table(const std::filesystem::path& dir, const std::string& stem,
                 const Table& t, TableFormat format);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

// field dump: index,coord_1..coord_d,re,im,prob in linear-index order
Table field_table(const AmplitudeField& f);

// 1-D: n,prob with signed ring positions in ascending order;
// 2-D: x,y,prob heat-map rows in linear-index order
Table distribution_table(const ProbabilityDistribution& p);

// call,total_steps,p_marked
Table trace_table(const SearchTrace& t);

// c,t1,peak_call,peak_prob,total_steps (only rows with a detected peak
// carry peak values; not-found rows print -1 and 0 probability)
Table scan_table(const std::vector<ScanRow>& rows);

// k,omega,re_lambda_plus,im_lambda_plus over a uniform closed [-pi, pi] grid
Table dispersion_table(int samples);

// n,p_empirical,p_smooth per site inside the smooth-density domain
Table density_compare_table(const ProbabilityDistribution& p, std::int64_t t);

nlohmann::json fit_to_json(const ScalingFit& fit);

} // namespace dqw::io
