#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bfam/run.hpp"
#include "bfam/verify.hpp"

using namespace bfam;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("bfam_test_" + name);
    fs::remove_all(p);
    return p;
}

const char* kShortChConfig = R"(
# short Camassa-Holm audit run
equation.b = 2.0
equation.c = 1.0
equation.p = 1
grid.n = 128
step.dt = 1e-3
step.t_end = 0.2
init.kind = fourier-modes
init.offset = 0.2
init.amplitude = 0.1
observe.stride = 20
output.frame_stride = 5
checks.energy = true
checks.mean = true
checks.identity = true
)";

} // namespace

TEST_CASE("config parsing: defaults, values, comments") {
    const RunConfig cfg = parse_run_config_text(kShortChConfig);
    CHECK(cfg.parameters.b == 2.0);
    CHECK(cfg.grid_n == 128);
    CHECK(cfg.step.dt == 1e-3);
    CHECK(cfg.step.formulation == Formulation::nonlocal_u); // default
    CHECK(cfg.check_energy);
    CHECK_FALSE(cfg.check_growth); // default
}

TEST_CASE("config parsing: rejects unknown keys and invalid values") {
    CHECK_THROWS_AS(parse_run_config_text("equation.q = 1\n"), config_error);
    CHECK_THROWS_AS(parse_run_config_text("equation.b = -1\n"), config_error);
    CHECK_THROWS_AS(parse_run_config_text("equation.b\n"), config_error);
    CHECK_THROWS_AS(parse_run_config_text("grid.n = 15\n"), config_error);
    CHECK_THROWS_AS(parse_run_config_text("step.dt = fast\n"), config_error);
    CHECK_THROWS_AS(parse_run_config_text("init.kind = whatever\n"), config_error);
    CHECK_THROWS_AS(parse_run_config_file("/no/such/file.cfg"), config_error);
}

TEST_CASE("zero data run: all-zero CSV, pass status") {
    RunConfig cfg = parse_run_config_text("init.kind = fourier-modes\n"
                                          "init.offset = 0\n"
                                          "init.amplitude = 0\n"
                                          "grid.n = 64\n"
                                          "step.dt = 1e-3\n"
                                          "step.t_end = 0.05\n"
                                          "checks.mean = true\n");
    const fs::path dir = fresh_dir("zero");
    CHECK(run_simulation(cfg, dir, true) == exit_pass);

    std::ifstream csv(dir / "invariants.csv");
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line ==
          "t,H1,H2,M_total,L1_m,I_u,sup_u,sup_ux,min_m,max_m,f_min,f_max,identity_residual");
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        // every column after t must be exactly zero
        const auto comma = line.find(',');
        CHECK(line.substr(comma) == ",0,0,0,0,0,0,0,0,0,0,0,0");
    }
    CHECK(rows > 0);

    const auto summary = nlohmann::json::parse(read_file(dir / "summary.json"));
    CHECK(summary.at("status") == "pass");
    CHECK(summary.at("breaking") == false);
}

TEST_CASE("CH run: checks pass, outputs reproducible, summary consistent with CSV") {
    const RunConfig cfg = parse_run_config_text(kShortChConfig);
    const fs::path dir1 = fresh_dir("ch1");
    const fs::path dir2 = fresh_dir("ch2");
    CHECK(run_simulation(cfg, dir1, true) == exit_pass);
    CHECK(run_simulation(cfg, dir2, true) == exit_pass);

    // bit-identical re-run
    CHECK(read_file(dir1 / "invariants.csv") == read_file(dir2 / "invariants.csv"));

    const auto summary = nlohmann::json::parse(read_file(dir1 / "summary.json"));
    CHECK(summary.at("checks").at("energy") == "pass");
    CHECK(summary.at("checks").at("mean") == "pass");
    CHECK(summary.at("checks").at("identity") == "pass");
    CHECK(summary.at("config_echo").at("equation.b") == "2");

    // drift values must be recomputable from the CSV
    std::ifstream csv(dir1 / "invariants.csv");
    std::string line;
    std::getline(csv, line); // header
    std::vector<double> h2s;
    while (std::getline(csv, line)) {
        std::istringstream row(line);
        std::string cell;
        for (int i = 0; i < 3 && std::getline(row, cell, ','); ++i) {}
        h2s.push_back(std::stod(cell));
    }
    REQUIRE(h2s.size() >= 2);
    double drift = 0.0;
    for (double h2 : h2s) drift = std::max(drift, std::abs(h2 - h2s[0]) / std::abs(h2s[0]));
    CHECK(summary.at("drifts").at("H2").get<double>() == doctest::Approx(drift).epsilon(1e-12));

    // frame files carry the documented header line
    std::ifstream frame(dir1 / "frames" / "frame_000000.txt");
    REQUIRE(frame);
    std::getline(frame, line);
    CHECK(line == "t=0 n=128");
    int samples = 0;
    while (std::getline(frame, line)) ++samples;
    CHECK(samples == 128);
}

TEST_CASE("breakdown run exits with the breakdown code and writes a summary") {
    RunConfig cfg = parse_run_config_text("init.kind = fourier-modes\n"
                                          "init.offset = 0.2\n"
                                          "init.amplitude = 0.15\n"
                                          "grid.n = 128\n"
                                          "step.dt = 1e-3\n"
                                          "step.t_end = 1.0\n"
                                          "step.max_value_guard = 0.5\n");
    const fs::path dir = fresh_dir("brk");
    CHECK(run_simulation(cfg, dir, true) == exit_breakdown);
    const auto summary = nlohmann::json::parse(read_file(dir / "summary.json"));
    CHECK(summary.at("breaking") == true);
    CHECK(summary.at("status") == "fail");
}

TEST_CASE("verify: unknown suite is rejected, names are stable") {
    CHECK_THROWS_AS(run_suite("nope"), config_error);
    const auto& names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
    CHECK(std::find(names.begin(), names.end(), "spectral") != names.end());
}
