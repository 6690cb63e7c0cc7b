#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bfam/run.hpp"
#include "bfam/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Periodic pseudo-spectral simulator and conservation-law audit harness "
                 "for the b-family equation"};
    app.require_subcommand(1);

    std::string output_dir = "out";
    bool quiet = false;
    app.add_option("--output-dir", output_dir, "Directory for run artifacts");
    app.add_flag("--quiet", quiet, "Only print failures");

    std::string config_path;
    CLI::App* run_cmd = app.add_subcommand("run", "Execute one configured simulation");
    run_cmd->fallthrough();
    run_cmd->add_option("config", config_path, "Run configuration file")->required();

    std::string suite;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a named verification bundle");
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", suite, "One of: spectral, conservation, sign, "
                                           "characteristics, growth, continuation, all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bfam::exit_usage;
    }

    try {
        if (run_cmd->parsed()) {
            const bfam::RunConfig cfg = bfam::parse_run_config_file(config_path);
            return bfam::run_simulation(cfg, output_dir, quiet);
        }
        return bfam::report_results(bfam::run_suite(suite), quiet);
    } catch (const bfam::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bfam::exit_usage;
    } catch (const bfam::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return bfam::exit_breakdown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bfam::exit_check_failure;
    }
}
