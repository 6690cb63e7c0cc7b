#include "bfam/characteristics.hpp"

#include <algorithm>
#include <cmath>

namespace bfam {

FrameInterpolant::FrameInterpolant(const std::vector<Frame>& frames, const Spectral& sp) {
    if (frames.size() < 2)
        throw precondition_error("FrameInterpolant: need at least two frames");
    times_.reserve(frames.size());
    coeffs_.reserve(frames.size());
    for (const Frame& f : frames) {
        times_.push_back(f.t);
        coeffs_.push_back(sp.analyze(f.u));
    }
}

std::pair<size_t, double> FrameInterpolant::locate(double t) const {
    if (t < times_.front() - 1e-12 || t > times_.back() + 1e-12)
        throw precondition_error("FrameInterpolant: time outside stored range");
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    size_t i = static_cast<size_t>(std::distance(times_.begin(), it));
    i = std::clamp<size_t>(i, 1, times_.size() - 1);
    const double w = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
    return {i, std::clamp(w, 0.0, 1.0)};
}

double FrameInterpolant::u(double t, double x) const {
    const auto [i, w] = locate(t);
    return (1.0 - w) * Spectral::eval(coeffs_[i - 1], x) + w * Spectral::eval(coeffs_[i], x);
}

double FrameInterpolant::ux(double t, double x) const {
    const auto [i, w] = locate(t);
    return (1.0 - w) * Spectral::eval_derivative(coeffs_[i - 1], x) +
           w * Spectral::eval_derivative(coeffs_[i], x);
}

TrajectorySet TrajectorySet::seed_at(const std::vector<double>& positions) {
    TrajectorySet tr;
    tr.seeds = positions;
    for (double& x : tr.seeds) x = wrap_unit(x);
    tr.lifted = tr.seeds;
    tr.jac_ode.assign(tr.seeds.size(), 1.0);
    tr.log_jac_quad.assign(tr.seeds.size(), 0.0);
    return tr;
}

TrajectorySet TrajectorySet::seed_grid(const Grid& grid, int count) {
    if (count < 1 || count > grid.n || grid.n % count != 0)
        throw precondition_error("TrajectorySet: seed count must divide n");
    std::vector<double> pos;
    pos.reserve(static_cast<size_t>(count));
    const int stride = grid.n / count;
    for (int j = 0; j < grid.n; j += stride) pos.push_back(grid.node(j));
    return seed_at(pos);
}

double TrajectorySet::jac_quad(size_t i) const { return std::exp(log_jac_quad[i]); }

TrajectorySet advance_flow(const FrameInterpolant& sol, TrajectorySet traj,
                           const Parameters& par, double t_target, double dt) {
    if (!(dt > 0.0)) throw precondition_error("advance_flow: need dt > 0");
    const long n_steps = std::lround((t_target - traj.t) / dt);
    const double t0 = traj.t;
    const size_t ns = traj.seeds.size();

    for (long k = 0; k < n_steps; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        const double h = dt;
        // each seed is independent; frames are read-only
#pragma omp parallel for schedule(static)
        for (long is = 0; is < static_cast<long>(ns); ++is) {
            const size_t i = static_cast<size_t>(is);
            // state per seed: (γ, γ_x, ∫ pc u^{p-1}u_x dτ)
            auto vel = [&](double tt, double x) {
                return par.c * std::pow(sol.u(tt, x), par.p);
            };
            auto stretch = [&](double tt, double x) {
                return par.p * par.c * std::pow(sol.u(tt, x), par.p - 1) * sol.ux(tt, x);
            };
            const double g0 = traj.lifted[i];
            const double j0 = traj.jac_ode[i];
            const double q0 = traj.log_jac_quad[i];

            const double kg1 = vel(t, g0);
            const double s1 = stretch(t, g0);
            const double kj1 = s1 * j0;

            const double kg2 = vel(t + h / 2, g0 + h / 2 * kg1);
            const double s2 = stretch(t + h / 2, g0 + h / 2 * kg1);
            const double kj2 = s2 * (j0 + h / 2 * kj1);

            const double kg3 = vel(t + h / 2, g0 + h / 2 * kg2);
            const double s3 = stretch(t + h / 2, g0 + h / 2 * kg2);
            const double kj3 = s3 * (j0 + h / 2 * kj2);

            const double kg4 = vel(t + h, g0 + h * kg3);
            const double s4 = stretch(t + h, g0 + h * kg3);
            const double kj4 = s4 * (j0 + h * kj3);

            traj.lifted[i] = g0 + h / 6 * (kg1 + 2 * kg2 + 2 * kg3 + kg4);
            traj.jac_ode[i] = j0 + h / 6 * (kj1 + 2 * kj2 + 2 * kj3 + kj4);
            traj.log_jac_quad[i] = q0 + h / 6 * (s1 + 2 * s2 + 2 * s3 + s4);
        }
        traj.t = t0 + static_cast<double>(k + 1) * dt;
        for (size_t i = 0; i < ns; ++i)
            if (!(traj.jac_ode[i] > 0.0))
                throw flow_degeneracy_error("characteristic Jacobian became non-positive",
                                            traj.t);
    }
    return traj;
}

double flow_conservation_residual(const TrajectorySet& traj, const Field& m_now,
                                  const Field& m0, const Parameters& par,
                                  const Spectral& sp) {
    const auto cm = sp.analyze(m_now);
    const auto c0 = sp.analyze(m0);
    const double expo = par.b / (par.p * par.c);
    double worst = 0.0;
    for (size_t i = 0; i < traj.seeds.size(); ++i) {
        const double m_here = Spectral::eval(cm, traj.gamma(i));
        // γ_x > 0 is enforced, so the fractional power is exp(expo·log γ_x)
        const double weight = std::exp(expo * std::log(traj.jac_ode[i]));
        const double m_start = Spectral::eval(c0, traj.seeds[i]);
        worst = std::max(worst, std::abs(m_here * weight - m_start));
    }
    return worst;
}

} // namespace bfam
