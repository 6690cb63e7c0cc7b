#include "bfam/diagnostics.hpp"

#include <cmath>

namespace bfam {

InvariantReport report(const Equation& eq, const State& s) {
    require_finite(s.u, "report");
    const Spectral& sp = eq.spectral();
    const Parameters& par = eq.parameters();

    const Field& u = s.u;
    const Field ux = sp.derivative(u, 1);
    const Field uxx = sp.derivative(u, 2);
    const Field uxxx = sp.derivative(u, 3);
    const Field m = sp.helmholtz_apply(u);
    const Field f = eq.f_family(u);

    InvariantReport r;
    r.t = s.t;
    r.H1 = integral(u);
    r.H2 = 0.5 * (integral(u * u) + integral(ux * ux));
    r.M_total = integral(m);
    r.L1_m = integral_abs(m);
    r.I_u = 0.25 * integral(u * u) + 0.75 * integral(ux * ux) + integral(uxx * uxx) +
            0.5 * integral(uxxx * uxxx);
    r.sup_u = max_abs(u);
    r.sup_ux = max_abs(ux);
    r.min_m = min_value(m);
    r.max_m = max_value(m);
    r.f_min = min_value(f);
    r.f_max = max_value(f);

    const Field residual = eq.F_family(u) + eq.rhs_nonlocal(u) + eq.advective(u);
    r.eq_identity_residual = max_abs(residual);

    r.L1_u = integral_abs(u);
    r.min_u = min_value(u);
    r.max_u = max_value(u);
    r.dI_rhs = -2.0 * par.c * integral(ux * uxx * uxx) -
               0.5 * par.c * integral(ux * uxxx * uxxx);
    return r;
}

std::map<std::string, double> drift(const std::vector<InvariantReport>& series,
                                    const Parameters& par, bool sign_preserved_data) {
    constexpr double eps = 1e-30;
    std::map<std::string, double> out;
    if (series.empty()) return out;
    auto rel = [&](double q, double q0) { return std::abs(q - q0) / std::max(std::abs(q0), eps); };
    auto track = [&](const std::string& name, auto getter) {
        const double q0 = getter(series.front());
        double worst = 0.0;
        for (const auto& r : series) worst = std::max(worst, rel(getter(r), q0));
        out[name] = worst;
    };
    if (par.conserves_mean()) {
        track("H1", [](const InvariantReport& r) { return r.H1; });
        track("M_total", [](const InvariantReport& r) { return r.M_total; });
    }
    if (par.conserves_energy()) track("H2", [](const InvariantReport& r) { return r.H2; });
    if (par.conserves_mean() && sign_preserved_data) {
        track("L1_m", [](const InvariantReport& r) { return r.L1_m; });
        track("L1_u", [](const InvariantReport& r) { return r.L1_u; });
    }
    return out;
}

GrowthCheck growth_envelope_check(const std::vector<InvariantReport>& series,
                                  const Parameters& par) {
    if (par.b != 0.0 || par.p != 1)
        throw precondition_error("growth_envelope_check: requires b = 0, p = 1");
    if (series.size() < 3)
        throw precondition_error("growth_envelope_check: series too short");

    GrowthCheck g;
    for (const auto& r : series) g.A_hat = std::max(g.A_hat, r.sup_ux);
    g.A_hat *= 2.0;

    // (a) centered finite-difference dI/dt against the exact-derivative identity
    bool id_ok = true;
    for (size_t i = 1; i + 1 < series.size(); ++i) {
        const double dIdt =
            (series[i + 1].I_u - series[i - 1].I_u) / (series[i + 1].t - series[i - 1].t);
        const double res = std::abs(dIdt - series[i].dI_rhs);
        g.max_identity_residual = std::max(g.max_identity_residual, res);
        if (res > std::max(1e-6, 1e-3 * std::abs(series[i].dI_rhs))) id_ok = false;
    }

    // (b) Gronwall envelope with the run's own slope bound
    const double I0 = series.front().I_u;
    const double t0 = series.front().t;
    g.envelope_ok = true;
    for (const auto& r : series) {
        const double cap = I0 * std::exp(par.c * g.A_hat * (r.t - t0)) * (1.0 + 1e-6);
        if (r.I_u > cap + 1e-30) g.envelope_ok = false;
    }
    g.pass = id_ok && g.envelope_ok;
    return g;
}

UxBoundCheck ux_bound_check(const std::vector<InvariantReport>& series, const Field& m0,
                            const Parameters& par) {
    if (par.b != 0.0 || par.p != 1)
        throw precondition_error("ux_bound_check: requires b = 0, p = 1");
    const double tol = 1e-6 * max_abs(m0);
    if (min_value(m0) < -tol && max_value(m0) > tol)
        throw precondition_error("ux_bound_check: m0 changes sign");

    UxBoundCheck chk;
    const double C1 = integral_abs(m0);
    double max_L1u = 0.0;
    for (const auto& r : series) {
        chk.observed_K = std::max(chk.observed_K, r.sup_ux);
        max_L1u = std::max(max_L1u, r.L1_u);
    }
    chk.bound = C1 + max_L1u;
    chk.pass = chk.observed_K <= chk.bound;
    return chk;
}

BreakingStatus breaking_monitor(const std::vector<InvariantReport>& series, double M) {
    BreakingStatus st;
    for (const auto& r : series) {
        if (r.sup_u + r.sup_ux >= M) {
            st.bounded = false;
            st.t_star = r.t;
            break;
        }
    }
    return st;
}

ProbeRecord continuation_probe(const Equation& eq, const State& s, double a, double b) {
    if (!(a >= 0.0 && b <= 1.0 && a < b))
        throw precondition_error("continuation_probe: need 0 <= a < b <= 1");
    const Parameters& par = eq.parameters();
    if (!par.is_H1() && !par.is_H2())
        throw precondition_error("continuation_probe: parameters satisfy neither H1 nor H2");

    const Spectral& sp = eq.spectral();
    const Field f = eq.f_family(s.u);
    const Field F = sp.grad_inv(f);
    const Field lam_inv_f = sp.helmholtz_invert(f);
    const auto cF = sp.analyze(F);

    ProbeRecord rec;
    rec.max_u_global = max_abs(s.u);
    rec.F_gap = Spectral::eval(cF, b) - Spectral::eval(cF, a);
    const Grid& grid = eq.grid();
    double acc = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        const double x = grid.node(j);
        if (x >= a && x <= b) {
            rec.max_u_window = std::max(rec.max_u_window, std::abs(s.u[j]));
            acc += lam_inv_f[j];
        }
    }
    rec.window_integral = acc * grid.dx;
    return rec;
}

} // namespace bfam
