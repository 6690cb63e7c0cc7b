#include "bfam/integrator.hpp"

#include <cmath>

namespace bfam {

Formulation formulation_from_string(const std::string& s) {
    if (s == "nonlocal-u") return Formulation::nonlocal_u;
    if (s == "momentum-m") return Formulation::momentum_m;
    throw config_error("unknown formulation '" + s + "' (expected nonlocal-u or momentum-m)");
}

std::string to_string(Formulation f) {
    return f == Formulation::nonlocal_u ? "nonlocal-u" : "momentum-m";
}

void StepConfig::validate() const {
    if (!(dt > 0.0 && dt <= 0.1)) throw config_error("StepConfig: need 0 < dt <= 0.1");
    if (!(t_end > 0.0)) throw config_error("StepConfig: need t_end > 0");
    if (!(cfl_limit > 0.0 && cfl_limit <= 1.0))
        throw config_error("StepConfig: need cfl_limit in (0,1]");
    if (!(max_value_guard > 0.0)) throw config_error("StepConfig: need max_value_guard > 0");
}

namespace {

void check_guard(const Equation& eq, const Field& u, double t, const StepConfig& cfg) {
    const double s = max_abs(u) + max_abs(eq.spectral().derivative(u, 1));
    if (!(s <= cfg.max_value_guard))
        throw breakdown_error("runaway guard exceeded: ||u||_inf + ||u_x||_inf = " +
                                  std::to_string(s),
                              t);
}

void check_cfl(const Equation& eq, const Field& u, double t, const StepConfig& cfg) {
    const Parameters& par = eq.parameters();
    const double speed = eq.parameters().c * std::pow(max_abs(u), par.p);
    const double dt_max = cfg.cfl_limit * eq.grid().dx / std::max(1e-12, speed);
    if (cfg.dt > dt_max)
        throw breakdown_error("CFL bound violated: dt = " + std::to_string(cfg.dt) +
                                  " > " + std::to_string(dt_max),
                              t);
}

Field rk4(const Equation& eq, Formulation form, const Field& y, double dt,
          double t, const StepConfig& cfg) {
    auto rhs = [&](const Field& w) {
        return form == Formulation::nonlocal_u ? eq.rhs_nonlocal(w) : eq.rhs_momentum(w);
    };
    auto guarded = [&](const Field& w) {
        const Field u = form == Formulation::nonlocal_u ? w : eq.spectral().helmholtz_invert(w);
        check_guard(eq, u, t, cfg);
        return w;
    };
    const Field k1 = rhs(y);
    const Field k2 = rhs(guarded(y + (0.5 * dt) * k1));
    const Field k3 = rhs(guarded(y + (0.5 * dt) * k2));
    const Field k4 = rhs(guarded(y + dt * k3));
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

State step(const Equation& eq, const State& s, const StepConfig& cfg) {
    cfg.validate();
    require_finite(s.u, "step");
    check_cfl(eq, s.u, s.t, cfg);
    check_guard(eq, s.u, s.t, cfg);
    Field u_next(eq.grid());
    if (cfg.formulation == Formulation::nonlocal_u) {
        u_next = rk4(eq, cfg.formulation, s.u, cfg.dt, s.t, cfg);
    } else {
        // reconstruct u = Λ⁻²m every stage: the m-u constraint holds exactly
        const Field m = eq.spectral().helmholtz_apply(s.u);
        const Field m_next = rk4(eq, cfg.formulation, m, cfg.dt, s.t, cfg);
        u_next = eq.spectral().helmholtz_invert(m_next);
    }
    check_guard(eq, u_next, s.t + cfg.dt, cfg);
    return State(s.t + cfg.dt, std::move(u_next));
}

EvolveResult evolve(const Equation& eq, const State& s0, const StepConfig& cfg,
                    const ObserveConfig& obs) {
    cfg.validate();
    require_finite(s0.u, "evolve");
    const long n_steps = std::lround(cfg.t_end / cfg.dt);
    if (n_steps < 1) throw config_error("evolve: t_end shorter than one step");

    EvolveResult res;
    State s(s0.t, s0.u);
    auto record = [&](const State& st) {
        res.frames.push_back({st.t, st.u});
        if (obs.on_frame) obs.on_frame(st);
    };
    record(s);
    for (long i = 0; i < n_steps; ++i) {
        try {
            s = step(eq, s, cfg);
        } catch (const breakdown_error& e) {
            res.breakdown = true;
            res.breakdown_time = e.t;
            res.breakdown_step = i;
            res.breakdown_reason = e.what();
            break;
        } catch (const numeric_error& e) {
            throw numeric_error(std::string(e.what()) + " (at step " + std::to_string(i) + ")");
        }
        s.t = s0.t + static_cast<double>(i + 1) * cfg.dt; // keep t free of accumulation error
        if ((i + 1) % obs.frame_stride == 0 || i + 1 == n_steps) record(s);
    }
    res.final = std::move(s);
    return res;
}

} // namespace bfam
