#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the dqw binary: exit codes, output files, byte-level
// determinism, and config replay.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "support/schema_check.hpp"

namespace fs = std::filesystem;

#ifndef DQW_CLI_PATH
#error "DQW_CLI_PATH must point at the dqw binary"
#endif
#ifndef DQW_SCHEMA_DIR
#error "DQW_SCHEMA_DIR must point at the schema directory"
#endif

namespace {

const std::string kCli = DQW_CLI_PATH;
const std::string kSchemas = DQW_SCHEMA_DIR;

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("dqw_cli_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool validate_file(const std::string& schema_name, const fs::path& file) {
    std::string why;
    const bool ok = dqw::test::validate_against(
        dqw::test::load_json(kSchemas + "/" + schema_name),
        dqw::test::load_json(file.string()), &why);
    if (!ok) MESSAGE(file.string(), ": ", why);
    return ok;
}

} // namespace

TEST_CASE("walk command writes the full output set") {
    TempDir dir("walk");
    REQUIRE(run("walk --d 1 --L 64 --t 16 --init symmetric --out " + dir.str()) == 0);
    for (const char* name : {"walk_field.csv", "walk_distribution.csv",
                             "walk_summary.json", "walk_descriptor.json",
                             "config.json"}) {
        CHECK(fs::exists(dir.path / name));
    }
    CHECK(slurp(dir.path / "walk_field.csv").starts_with("index,coord_1,re,im,prob\n"));
    CHECK(validate_file("walk_summary.schema.json", dir.path / "walk_summary.json"));
    CHECK(validate_file("walk_descriptor.schema.json", dir.path / "walk_descriptor.json"));
    CHECK(validate_file("config.schema.json", dir.path / "config.json"));
}

TEST_CASE("absorbing walk emits the absorption series") {
    TempDir dir("abs");
    REQUIRE(run("walk --d 1 --L 64 --t 8 --init symmetric --absorbing --out " +
                dir.str()) == 0);
    const auto series = slurp(dir.path / "walk_absorption.csv");
    CHECK(series.starts_with("t,p_abs\n"));
    std::istringstream lines(series);
    std::string line;
    std::getline(lines, line); // header
    std::getline(lines, line);
    CHECK(std::stod(line.substr(line.find(',') + 1)) == doctest::Approx(0.25).epsilon(1e-14));
    std::getline(lines, line);
    CHECK(std::stod(line.substr(line.find(',') + 1)) == doctest::Approx(0.375).epsilon(1e-14));
}

TEST_CASE("exit codes") {
    TempDir dir("err");
    SUBCASE("invalid odd side is an input error") {
        CHECK(run("walk --d 1 --L 7 --t 2 --out " + dir.str()) == 2);
    }
    SUBCASE("absorbing wall in 2-D is an input error") {
        CHECK(run("walk --d 2 --L 8 --t 2 --absorbing --out " + dir.str()) == 2);
    }
    SUBCASE("missing geometry is an input error") {
        CHECK(run("walk --t 2 --out " + dir.str()) == 2);
    }
    SUBCASE("unknown flag is a usage error") {
        CHECK(run("walk --no-such-flag --out " + dir.str()) == 2);
    }
    SUBCASE("capped search exits 1 but still writes the trace") {
        CHECK(run("search --d 2 --L 16 --max-calls 2 --out " + dir.str()) == 1);
        CHECK(fs::exists(dir.path / "search_trace.csv"));
        CHECK(validate_file("search_summary.schema.json",
                            dir.path / "search_summary.json"));
    }
}

TEST_CASE("search outputs validate and report the peak") {
    TempDir dir("search");
    REQUIRE(run("search --d 2 --L 16 --t1 3 --max-calls 32 --dump-peak --out " +
                dir.str()) == 0);
    CHECK(validate_file("search_summary.schema.json", dir.path / "search_summary.json"));
    CHECK(fs::exists(dir.path / "search_trace.csv"));
    CHECK(fs::exists(dir.path / "search_peak_field.csv"));
    CHECK(fs::exists(dir.path / "search_peak_distribution.csv"));
    const auto summary = dqw::test::load_json((dir.path / "search_summary.json").string());
    CHECK(summary.at("found") == true);
    CHECK(summary.at("peak_prob").get<double>() > 0.1);
}

TEST_CASE("scan and scaling outputs validate") {
    TempDir dir("scan");
    REQUIRE(run("scan --d 2 --L 8 --c-grid 0.5,0.7071067811865476 --t1-grid 2,3 "
                "--max-calls 64 --out " + dir.str()) == 0);
    CHECK(validate_file("scan_summary.schema.json", dir.path / "scan_summary.json"));
    CHECK(slurp(dir.path / "scan_table.csv")
              .starts_with("c,t1,peak_call,peak_prob,total_steps\n"));

    TempDir dir2("scaling");
    REQUIRE(run("scaling --d 3 --sides 8,12 --out " + dir2.str()) == 0);
    CHECK(validate_file("scaling_fit.schema.json", dir2.path / "scaling_fit.json"));
}

TEST_CASE("verify subcommand passes and dumps blocks") {
    TempDir dir("verify");
    REQUIRE(run("verify --dump-blocks --out " + dir.str()) == 0);
    CHECK(validate_file("verify_report.schema.json", dir.path / "verify_report.json"));
    CHECK(validate_file("block.schema.json", dir.path / "block_d2_odd.json"));
    CHECK(validate_file("block.schema.json", dir.path / "block_d3_even.json"));
}

TEST_CASE("json table format") {
    TempDir dir("fmt");
    REQUIRE(run("walk --d 1 --L 16 --t 2 --format json --out " + dir.str()) == 0);
    CHECK(fs::exists(dir.path / "walk_field.json"));
    CHECK(!fs::exists(dir.path / "walk_field.csv"));
    const auto rows = dqw::test::load_json((dir.path / "walk_field.json").string());
    CHECK(rows.is_array());
    CHECK(rows.size() == 16);
    CHECK(rows[0].contains("prob"));
}

TEST_CASE("identical configs give bit-identical outputs") {
    TempDir a("det_a");
    TempDir b("det_b");
    const std::string spec = "walk --d 2 --L 16 --t 9 --init symmetric2d";
    REQUIRE(run(spec + " --threads 1 --out " + a.str()) == 0);
    REQUIRE(run(spec + " --threads 3 --out " + b.str()) == 0);
    CHECK(slurp(a.path / "walk_field.csv") == slurp(b.path / "walk_field.csv"));
    CHECK(slurp(a.path / "walk_distribution.csv") ==
          slurp(b.path / "walk_distribution.csv"));
}

TEST_CASE("a run can be replayed from its config file") {
    TempDir a("replay_a");
    TempDir b("replay_b");
    REQUIRE(run("search --d 2 --L 16 --t1 2 --max-calls 24 --out " + a.str()) == 0);
    REQUIRE(run("search --config " + (a.path / "config.json").string() +
                " --out " + b.str()) == 0);
    CHECK(slurp(a.path / "search_trace.csv") == slurp(b.path / "search_trace.csv"));

    // replaying under the wrong subcommand is refused
    CHECK(run("walk --config " + (a.path / "config.json").string() + " --out " +
              b.str()) == 2);
}
