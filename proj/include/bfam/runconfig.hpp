#ifndef BFAM_RUNCONFIG_HPP
#define BFAM_RUNCONFIG_HPP

#include <map>
#include <string>

#include "bfam/initdata.hpp"
#include "bfam/integrator.hpp"

namespace bfam {

/// One run, fully reproducible from this struct alone. Parsed from a flat
/// key-value file: one dotted key per line (`equation.b = 2.0`), `#` starts a
/// comment, unknown keys are errors.
struct RunConfig {
    Parameters parameters;
    int grid_n = 256;
    bool dealias = true;
    StepConfig step;
    InitSpec init;
    int observe_stride = 10;     // steps between observations
    int frame_file_stride = 100; // observations between written frame files (0 = none)

    // optional audits; each enabled check contributes to the run's pass/fail
    bool check_energy = false;
    double energy_tol = 1e-8;
    bool check_mean = false;
    double mean_tol = 1e-9;
    bool check_sign = false;
    double sign_tol = 1e-6;
    bool check_l1 = false;
    double l1_tol = 1e-7;
    bool check_identity = false;
    double identity_tol = 1e-10;
    bool check_growth = false;
    bool check_ux_bound = false;
    bool check_characteristics = false;
    double characteristics_tol = 1e-5;
    int characteristics_seeds = 64;
    bool check_continuation = false;
    double continuation_window_a = 0.0;
    double continuation_window_b = 0.5;
    double continuation_delta = 1e-6;

    /// Ordered echo of every key, as written into summary.json.
    std::map<std::string, std::string> echo() const;
};

RunConfig parse_run_config_text(const std::string& text);
RunConfig parse_run_config_file(const std::string& path);

} // namespace bfam

#endif
