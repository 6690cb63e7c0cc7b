#include "bfam/verify.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include "bfam/characteristics.hpp"
#include "bfam/convolution.hpp"
#include "bfam/diagnostics.hpp"
#include "bfam/initdata.hpp"

namespace bfam {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string fmt(double x) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Field cosine(const Grid& g, double offset, double amp, int mode) {
    Field f(g);
    for (int j = 0; j < g.n; ++j) f[j] = offset + amp * std::cos(two_pi * mode * g.node(j));
    return f;
}

struct SuiteRun {
    std::unique_ptr<Equation> eq;
    Field m0;
    EvolveResult res;
    std::vector<InvariantReport> series;
};

SuiteRun evolve_with_reports(Parameters par, int n, const InitSpec& init_spec, double t_end,
                             double dt = 1e-4, int stride = 10, double cfl = 0.5) {
    SuiteRun run;
    run.eq = std::make_unique<Equation>(Grid(n), par);
    const InitData init = build(init_spec, run.eq->spectral());
    run.m0 = run.eq->spectral().helmholtz_apply(init.u0);
    StepConfig cfg;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.cfl_limit = cfl;
    ObserveConfig obs;
    obs.frame_stride = stride;
    obs.on_frame = [&](const State& s) { run.series.push_back(report(*run.eq, s)); };
    run.res = evolve(*run.eq, State(0.0, init.u0), cfg, obs);
    return run;
}

InitSpec momentum_first_spec(double offset, double amp, SignConstraint sign) {
    InitSpec spec;
    spec.kind = InitKind::momentum_first;
    spec.offset = offset;
    spec.amplitude = amp;
    spec.mode = 1;
    spec.sign = sign;
    return spec;
}

InitSpec cosine_spec(double offset, double amp) {
    InitSpec spec;
    spec.kind = InitKind::fourier_modes;
    spec.offset = offset;
    spec.amplitude = amp;
    spec.mode = 1;
    return spec;
}

// ---- spectral suite -------------------------------------------------------

std::vector<CheckResult> suite_spectral() {
    std::vector<CheckResult> out;
    const int kmax = 16;
    const int n_fields = 20;

    // oracle agreement as n doubles
    std::vector<double> errs;
    for (int n : {64, 128, 256, 512}) {
        const Grid grid(n);
        const Spectral sp(grid);
        double worst = 0.0;
        for (unsigned seed = 0; seed < n_fields; ++seed) {
            const Field f = random_band_limited(grid, kmax, seed);
            const Field a = sp.helmholtz_invert(f);
            const Field b = helmholtz_invert_convolution(f);
            worst = std::max(worst, max_abs(a - b));
        }
        errs.push_back(worst);
    }
    double min_order = 1e9;
    std::ostringstream orders;
    for (size_t i = 0; i + 1 < errs.size(); ++i) {
        const double order = std::log2(errs[i] / errs[i + 1]);
        min_order = std::min(min_order, order);
        orders << (i ? ", " : "") << fmt(order);
    }
    out.push_back({"spectral-kernel-oracle-order", min_order >= 1.9,
                   "empirical orders [" + orders.str() + "], errors down to " + fmt(errs.back())});

    // round trip at reference resolution
    {
        const Grid grid(256);
        const Spectral sp(grid);
        double worst = 0.0;
        for (unsigned seed = 0; seed < n_fields; ++seed) {
            const Field f = random_band_limited(grid, kmax, seed);
            const Field rt = sp.helmholtz_apply(sp.helmholtz_invert(f));
            worst = std::max(worst, max_abs(rt - f) / std::max(max_abs(f), 1e-300));
        }
        out.push_back({"helmholtz-round-trip", worst < 1e-11, "max relative error " + fmt(worst)});
    }
    return out;
}

// ---- conservation suite ---------------------------------------------------

std::vector<CheckResult> suite_conservation() {
    std::vector<CheckResult> out;

    // energy + mean in the CH regime
    {
        const SuiteRun run =
            evolve_with_reports(Parameters(2, 1, 1), 256, cosine_spec(0.2, 0.1), 1.0);
        const auto d = drift(run.series, run.eq->parameters(), false);
        const double h2 = d.at("H2");
        const double h1 = d.at("H1");
        out.push_back({"energy-ch", h2 < 1e-8 && h1 < 1e-10,
                       "H2 drift " + fmt(h2) + ", H1 drift " + fmt(h1)});
    }

    // momentum integral for b=0 transport and for b = pc with p = 2
    for (const auto& [name, par] :
         {std::pair<std::string, Parameters>{"momentum-integral-b0", Parameters(0, 1, 1)},
          std::pair<std::string, Parameters>{"momentum-integral-bpc", Parameters(2, 1, 2)}}) {
        const SuiteRun run = evolve_with_reports(par, 256, cosine_spec(0.2, 0.1), 1.0);
        const auto d = drift(run.series, par, false);
        const double mt = d.at("M_total");
        out.push_back({name, mt < 1e-9, "M_total drift " + fmt(mt)});
    }

    // non-local identity on every frame, p = 1 and b = pc members
    {
        double worst = 0.0;
        for (const Parameters par : {Parameters(2, 1, 1), Parameters(2, 1, 2)}) {
            const SuiteRun run = evolve_with_reports(par, 256, cosine_spec(0.2, 0.1), 0.2);
            for (const auto& r : run.series)
                worst = std::max(worst, r.eq_identity_residual);
        }
        out.push_back({"nonlocal-identity", worst < 1e-10, "max residual " + fmt(worst)});
    }

    // u-form vs m-form evolution from identical data
    {
        const Grid grid(256);
        const Equation eq(grid, Parameters(2, 1, 1));
        const Field u0 = cosine(grid, 0.2, 0.1, 1);
        StepConfig cfg;
        cfg.dt = 1e-4;
        cfg.t_end = 0.5;
        cfg.formulation = Formulation::nonlocal_u;
        const EvolveResult a = evolve(eq, State(0.0, u0), cfg);
        cfg.formulation = Formulation::momentum_m;
        const EvolveResult b = evolve(eq, State(0.0, u0), cfg);
        const double gap = max_abs(a.final.u - b.final.u);
        out.push_back({"formulation-cross-check", gap < 1e-7, "final gap " + fmt(gap)});
    }

    // RK4 self-convergence on the energy-run data
    {
        const Grid grid(128);
        const Equation eq(grid, Parameters(2, 1, 1));
        const Field u0 = cosine(grid, 0.2, 0.1, 1);
        auto final_u = [&](double dt) {
            StepConfig cfg;
            cfg.dt = dt;
            cfg.t_end = 0.5;
            cfg.cfl_limit = 1.0;
            return evolve(eq, State(0.0, u0), cfg).final.u;
        };
        const Field u1 = final_u(1e-2), u2 = final_u(5e-3), u3 = final_u(2.5e-3);
        const double e1 = max_abs(u1 - u2), e2 = max_abs(u2 - u3);
        const double order = std::log2(e1 / e2);
        out.push_back({"rk4-self-convergence", order >= 3.8,
                       "order " + fmt(order) + " (errors " + fmt(e1) + " -> " + fmt(e2) + ")"});
    }

    // spatial resolution: n = 256 vs n = 512 at t = 0.5
    {
        auto solve = [&](int n) {
            const Grid grid(n);
            const Equation eq(grid, Parameters(2, 1, 1));
            StepConfig cfg;
            cfg.dt = 1e-4;
            cfg.t_end = 0.5;
            return evolve(eq, State(0.0, cosine(grid, 0.2, 0.1, 1)), cfg).final.u;
        };
        const Field coarse = solve(256);
        const Field fine = solve(512);
        double gap = 0.0;
        for (int j = 0; j < coarse.size(); ++j)
            gap = std::max(gap, std::abs(coarse[j] - fine[2 * j]));
        const double rel = gap / max_abs(coarse);
        out.push_back({"spatial-resolution", rel < 1e-9, "relative change " + fmt(rel)});
    }
    return out;
}

// ---- sign suite -----------------------------------------------------------

std::vector<CheckResult> suite_sign() {
    std::vector<CheckResult> out;

    struct Case {
        std::string name;
        Parameters par;
        double amp; // momentum amplitude sign selects the mirrored case
    };
    for (const Case& cse : {Case{"momentum-sign-b0", Parameters(0, 1, 1), 1.0},
                            Case{"momentum-sign-ch", Parameters(2, 1, 1), 1.0},
                            Case{"momentum-sign-ch-mirrored", Parameters(2, 1, 1), -1.0}}) {
        const SignConstraint sc =
            cse.amp > 0 ? SignConstraint::non_negative : SignConstraint::non_positive;
        const SuiteRun run = evolve_with_reports(
            cse.par, 256, momentum_first_spec(cse.amp, 0.5 * cse.amp, sc), 2.0, 1e-4, 20);
        double min_m = 0.0, min_u = 0.0, max_m = 0.0, max_u = 0.0;
        for (const auto& r : run.series) {
            min_m = std::min(min_m, r.min_m);
            min_u = std::min(min_u, r.min_u);
            max_m = std::max(max_m, r.max_m);
            max_u = std::max(max_u, r.max_u);
        }
        const bool ok = cse.amp > 0 ? (min_m >= -1e-6 && min_u >= -1e-6)
                                    : (max_m <= 1e-6 && max_u <= 1e-6);
        const auto d = drift(run.series, cse.par, true);
        const double l1 = d.at("L1_u");
        out.push_back({cse.name, ok && l1 < 1e-7 && !run.res.breakdown,
                       cse.amp > 0 ? ("min m " + fmt(min_m) + ", min u " + fmt(min_u) +
                                      ", L1(u) drift " + fmt(l1))
                                   : ("max m " + fmt(max_m) + ", max u " + fmt(max_u) +
                                      ", L1(u) drift " + fmt(l1))});
    }

    // sign of f on arbitrary fields, H1 and H2-odd parameter samples
    {
        const Grid grid(256);
        double worst = 0.0;
        auto probe = [&](const Parameters& par) {
            const Equation eq(grid, par);
            for (unsigned seed = 0; seed < 10; ++seed) {
                const Field u = random_band_limited(grid, 20, seed, 0.8, 0.3);
                const Field f = eq.f_family(u);
                const double scale = std::max(max_abs(f), 1e-300);
                worst = std::max(worst, -min_value(f) / scale);
            }
        };
        const double c = 1.3;
        for (double b : {0.0, c, 2 * c, 3 * c}) probe(Parameters(b, c, 1));
        probe(Parameters(3 * c, c, 3)); // b = pc with p odd
        out.push_back({"f-sign-h1-and-h2-odd", worst <= 1e-12, "worst -min(f)/scale " + fmt(worst)});
    }

    // f sign under b = pc with even p and one-signed momentum (needs a real run)
    {
        const SuiteRun run = evolve_with_reports(
            Parameters(2, 1, 2), 256,
            momentum_first_spec(1.0, 0.5, SignConstraint::non_negative), 0.5);
        double worst = 0.0;
        for (const auto& r : run.series) {
            const double scale = std::max(std::abs(r.f_max), 1e-300);
            worst = std::max(worst, -r.f_min / scale);
        }
        out.push_back({"f-sign-h2-even", worst <= 1e-6, "worst -min(f)/scale " + fmt(worst)});
    }
    return out;
}

// ---- characteristics suite ------------------------------------------------

std::vector<CheckResult> suite_characteristics() {
    std::vector<CheckResult> out;
    const SuiteRun run = evolve_with_reports(
        Parameters(2, 1, 1), 256, momentum_first_spec(1.0, 0.5, SignConstraint::non_negative),
        0.5);
    const FrameInterpolant sol(run.res.frames, run.eq->spectral());
    TrajectorySet traj = TrajectorySet::seed_grid(run.eq->grid(), 64);
    traj = advance_flow(sol, traj, run.eq->parameters(), 0.5, 1e-3);

    const Field m_now = run.eq->spectral().helmholtz_apply(run.res.final.u);
    const double resid =
        flow_conservation_residual(traj, m_now, run.m0, run.eq->parameters(), run.eq->spectral());
    out.push_back({"flow-identity", resid < 1e-5, "max residual " + fmt(resid)});

    double jac_gap = 0.0, jac_min = 1e300;
    for (size_t i = 0; i < traj.seeds.size(); ++i) {
        jac_gap = std::max(jac_gap,
                           std::abs(traj.jac_ode[i] - traj.jac_quad(i)) / traj.jac_ode[i]);
        jac_min = std::min(jac_min, traj.jac_ode[i]);
    }
    out.push_back({"jacobian-agreement", jac_gap < 1e-6, "max relative gap " + fmt(jac_gap)});
    out.push_back({"jacobian-positivity", jac_min > 0.0, "min Jacobian " + fmt(jac_min)});
    return out;
}

// ---- growth suite ---------------------------------------------------------

std::vector<CheckResult> suite_growth() {
    std::vector<CheckResult> out;
    const SuiteRun run = evolve_with_reports(
        Parameters(0, 1, 1), 256, momentum_first_spec(1.0, 0.5, SignConstraint::non_negative),
        2.0, 1e-4, 10);
    out.push_back({"global-run-completes", !run.res.breakdown,
                   run.res.breakdown ? ("guard trip at t " + fmt(run.res.breakdown_time))
                                     : ("reached t " + fmt(run.res.final.t))});

    const UxBoundCheck ub = ux_bound_check(run.series, run.m0, run.eq->parameters());
    out.push_back({"ux-bound", ub.pass,
                   "observed sup|u_x| " + fmt(ub.observed_K) + " <= bound " + fmt(ub.bound)});

    const GrowthCheck g = growth_envelope_check(run.series, run.eq->parameters());
    out.push_back({"growth-identity", g.max_identity_residual < 1e-6,
                   "max dI/dt residual " + fmt(g.max_identity_residual)});
    out.push_back({"gronwall-envelope", g.envelope_ok, "slope bound A " + fmt(g.A_hat)});
    return out;
}

// ---- continuation suite ---------------------------------------------------

std::vector<CheckResult> suite_continuation() {
    std::vector<CheckResult> out;
    const Grid grid(256);

    // strictly positive u: the window integral of Λ⁻²f is strictly positive
    {
        const Equation eq(grid, Parameters(1, 1, 1)); // H1 member
        const Field m0 = cosine(grid, 1.0, 0.5, 1);
        const State s(0.0, eq.spectral().helmholtz_invert(m0));
        bool ok = true;
        double smallest = 1e300;
        for (const auto& [a, b] : {std::pair{0.0, 0.2}, std::pair{0.3, 0.6}, std::pair{0.7, 0.95}}) {
            const ProbeRecord r = continuation_probe(eq, s, a, b);
            smallest = std::min(smallest, r.window_integral);
            ok = ok && r.window_integral > 0.0;
        }
        out.push_back({"probe-positive-solution", ok, "smallest window integral " + fmt(smallest)});
    }

    // bump away from the window: u vanishes there but the smeared f does not
    {
        const Equation eq(grid, Parameters(1, 1, 1));
        InitSpec spec;
        spec.kind = InitKind::gaussian_bump_periodic;
        spec.amplitude = 1.0;
        spec.center = 0.5;
        spec.width = 0.03;
        const State s(0.0, build(spec, eq.spectral()).u0);
        const ProbeRecord r = continuation_probe(eq, s, 0.0, 0.2);
        out.push_back({"probe-bump-window", r.max_u_window < 1e-8 && r.window_integral > 1e-4,
                       "max|u| on window " + fmt(r.max_u_window) + ", window integral " +
                           fmt(r.window_integral)});
    }
    return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "spectral", "conservation", "sign", "characteristics", "growth", "continuation", "all"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    if (suite == "spectral") return suite_spectral();
    if (suite == "conservation") return suite_conservation();
    if (suite == "sign") return suite_sign();
    if (suite == "characteristics") return suite_characteristics();
    if (suite == "growth") return suite_growth();
    if (suite == "continuation") return suite_continuation();
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const std::string& s : suite_names()) {
            if (s == "all") continue;
            auto part = run_suite(s);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    throw config_error("unknown suite '" + suite + "'");
}

int report_results(const std::vector<CheckResult>& results, bool quiet) {
    bool all = true;
    for (const CheckResult& r : results) {
        all = all && r.pass;
        if (!quiet || !r.pass)
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    }
    return all ? 0 : 1;
}

} // namespace bfam
