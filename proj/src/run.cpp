#include "bfam/run.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "bfam/characteristics.hpp"
#include "bfam/diagnostics.hpp"

namespace bfam {

namespace {

std::string num(double x) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<InvariantReport>& series) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write " + path.string());
    out << "t,H1,H2,M_total,L1_m,I_u,sup_u,sup_ux,min_m,max_m,f_min,f_max,identity_residual\n";
    for (const auto& r : series) {
        out << num(r.t) << ',' << num(r.H1) << ',' << num(r.H2) << ',' << num(r.M_total) << ','
            << num(r.L1_m) << ',' << num(r.I_u) << ',' << num(r.sup_u) << ',' << num(r.sup_ux)
            << ',' << num(r.min_m) << ',' << num(r.max_m) << ',' << num(r.f_min) << ','
            << num(r.f_max) << ',' << num(r.eq_identity_residual) << '\n';
    }
}

void write_frame(const std::filesystem::path& path, const Frame& fr) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write " + path.string());
    out << "t=" << num(fr.t) << " n=" << fr.u.grid.n << '\n';
    for (int j = 0; j < fr.u.size(); ++j) out << num(fr.u[j]) << '\n';
}

} // namespace

int run_simulation(const RunConfig& cfg, const std::filesystem::path& output_dir, bool quiet) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    fs::create_directories(output_dir / "frames", ec);
    if (!fs::is_directory(output_dir) || !fs::is_directory(output_dir / "frames"))
        throw config_error("cannot create output directory " + output_dir.string());

    const Grid grid(cfg.grid_n);
    const Equation eq(grid, cfg.parameters, cfg.dealias);
    const InitData init = build(cfg.init, eq.spectral());
    const Field m0 = eq.spectral().helmholtz_apply(init.u0);
    const double m0_scale = max_abs(m0);
    const bool sign_preserved =
        !(init.m0_min < -1e-6 * m0_scale && init.m0_max > 1e-6 * m0_scale);

    std::vector<InvariantReport> series;
    ObserveConfig obs;
    obs.frame_stride = cfg.observe_stride;
    obs.on_frame = [&](const State& s) { series.push_back(report(eq, s)); };

    const EvolveResult res = evolve(eq, State(0.0, init.u0), cfg.step, obs);

    write_csv(output_dir / "invariants.csv", series);
    if (cfg.frame_file_stride > 0) {
        int written = 0;
        for (size_t i = 0; i < res.frames.size(); ++i) {
            if (i % static_cast<size_t>(cfg.frame_file_stride) == 0 || i + 1 == res.frames.size()) {
                char name[32];
                snprintf(name, sizeof name, "frame_%06d.txt", written++);
                write_frame(output_dir / "frames" / name, res.frames[i]);
            }
        }
    }

    const auto drifts = drift(series, cfg.parameters, sign_preserved);
    nlohmann::ordered_json summary;
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    nlohmann::ordered_json drifts_json = nlohmann::ordered_json::object();
    nlohmann::ordered_json residuals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : drifts) drifts_json[k] = v;

    bool all_pass = true;
    auto record_check = [&](const std::string& name, bool pass) {
        checks[name] = pass ? "pass" : "fail";
        all_pass = all_pass && pass;
    };

    double max_identity = 0.0;
    for (const auto& r : series) max_identity = std::max(max_identity, r.eq_identity_residual);
    residuals["identity_max"] = max_identity;

    if (cfg.check_energy) {
        const auto it = drifts.find("H2");
        record_check("energy", it != drifts.end() && it->second < cfg.energy_tol);
    }
    if (cfg.check_mean) {
        const auto h1 = drifts.find("H1");
        const auto mt = drifts.find("M_total");
        record_check("mean", h1 != drifts.end() && h1->second < cfg.mean_tol &&
                                 mt != drifts.end() && mt->second < cfg.mean_tol);
    }
    if (cfg.check_sign) {
        double min_m = 0.0, min_u = 0.0, max_m = 0.0, max_u = 0.0;
        for (const auto& r : series) {
            min_m = std::min(min_m, r.min_m);
            max_m = std::max(max_m, r.max_m);
            min_u = std::min(min_u, r.min_u);
            max_u = std::max(max_u, r.max_u);
        }
        const double tol = cfg.sign_tol * m0_scale;
        bool ok = sign_preserved;
        if (init.m0_min >= -tol) ok = ok && min_m >= -tol && min_u >= -tol;
        if (init.m0_max <= tol) ok = ok && max_m <= tol && max_u <= tol;
        record_check("sign", ok);
    }
    if (cfg.check_l1) {
        const auto it = drifts.find("L1_u");
        record_check("l1", it != drifts.end() && it->second < cfg.l1_tol);
    }
    if (cfg.check_identity) record_check("identity", max_identity < cfg.identity_tol);
    if (cfg.check_growth) {
        const GrowthCheck g = growth_envelope_check(series, cfg.parameters);
        residuals["growth_identity_max"] = g.max_identity_residual;
        record_check("growth", g.pass);
    }
    if (cfg.check_ux_bound) {
        const UxBoundCheck b = ux_bound_check(series, m0, cfg.parameters);
        residuals["ux_bound_margin"] = b.bound - b.observed_K;
        record_check("ux_bound", b.pass);
    }
    if (cfg.check_characteristics && res.frames.size() >= 2) {
        const FrameInterpolant sol(res.frames, eq.spectral());
        TrajectorySet traj = TrajectorySet::seed_grid(grid, cfg.characteristics_seeds);
        const double traj_dt = cfg.step.dt * cfg.observe_stride;
        traj = advance_flow(sol, traj, cfg.parameters, res.frames.back().t, traj_dt);
        const Field m_now = eq.spectral().helmholtz_apply(res.frames.back().u);
        const double resid =
            flow_conservation_residual(traj, m_now, m0, cfg.parameters, eq.spectral());
        residuals["flow_conservation"] = resid;
        record_check("characteristics", resid < cfg.characteristics_tol);
    }
    if (cfg.check_continuation) {
        const ProbeRecord pr = continuation_probe(eq, res.final, cfg.continuation_window_a,
                                                  cfg.continuation_window_b);
        residuals["probe_max_u_window"] = pr.max_u_window;
        residuals["probe_F_gap"] = pr.F_gap;
        residuals["probe_window_integral"] = pr.window_integral;
        residuals["probe_max_u_global"] = pr.max_u_global;
        const double d = cfg.continuation_delta;
        const double thr = 1e-3 * d * d;
        const bool consistent = pr.max_u_global <= d || pr.max_u_window > thr ||
                                std::abs(pr.F_gap) > thr || pr.window_integral > thr;
        record_check("continuation", consistent);
    }

    summary["status"] = (all_pass && !res.breakdown) ? "pass" : "fail";
    summary["breaking"] = res.breakdown;
    if (res.breakdown) {
        summary["breaking_time"] = res.breakdown_time;
        summary["breaking_reason"] = res.breakdown_reason;
    }
    summary["checks"] = checks;
    summary["drifts"] = drifts_json;
    summary["residuals"] = residuals;
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : cfg.echo()) echo[k] = v;
    summary["config_echo"] = echo;

    std::ofstream out(output_dir / "summary.json");
    if (!out) throw config_error("cannot write summary.json");
    out << summary.dump(2) << '\n';

    if (!quiet) {
        std::cout << "run: " << series.size() << " observations to t=" << res.final.t
                  << (res.breakdown ? " [breakdown]" : "") << ", status "
                  << summary["status"].get<std::string>() << '\n';
        for (const auto& [k, v] : checks.items())
            std::cout << "  check " << k << ": " << v.get<std::string>() << '\n';
    }

    if (res.breakdown) return exit_breakdown;
    return all_pass ? exit_pass : exit_check_failure;
}

} // namespace bfam
