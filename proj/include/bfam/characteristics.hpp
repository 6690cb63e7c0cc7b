#ifndef BFAM_CHARACTERISTICS_HPP
#define BFAM_CHARACTERISTICS_HPP

#include <complex>
#include <vector>

#include "bfam/integrator.hpp"

namespace bfam {

/// Dense-output view of a stored run: spectral interpolation in space,
/// linear interpolation in time between frames. Frames must be equally
/// informative (same grid) and time-ordered.
class FrameInterpolant {
  public:
    explicit FrameInterpolant(const std::vector<Frame>& frames, const Spectral& sp);

    double u(double t, double x) const;
    double ux(double t, double x) const;
    double t_min() const { return times_.front(); }
    double t_max() const { return times_.back(); }

  private:
    std::pair<size_t, double> locate(double t) const;
    std::vector<double> times_;
    std::vector<std::vector<std::complex<double>>> coeffs_;
};

/// Characteristic curves γ(t, x_i) seeded at positions x_i, with Jacobians
/// γ_x computed two independent ways: by the coupled variational ODE and by
/// exponentiating the quadrature of the stretching integrand.
struct TrajectorySet {
    std::vector<double> seeds;    // initial positions in [0,1)
    std::vector<double> lifted;   // unreduced positions (winding bookkeeping)
    std::vector<double> jac_ode;  // γ_x via dγ_x/dt = pc u^{p-1}u_x γ_x
    std::vector<double> log_jac_quad; // ∫ pc u^{p-1}u_x dτ along the curve
    double t = 0.0;

    static TrajectorySet seed_at(const std::vector<double>& positions);
    static TrajectorySet seed_grid(const Grid& grid, int count);

    double gamma(size_t i) const { return lifted[i] - std::floor(lifted[i]); }
    double jac_quad(size_t i) const;
};

/// Advance all trajectories from traj.t to t_target with RK4 steps of size dt
/// against the stored run. Throws flow_degeneracy_error if a Jacobian drops
/// to zero or below.
TrajectorySet advance_flow(const FrameInterpolant& sol, TrajectorySet traj,
                           const Parameters& par, double t_target, double dt);

/// max over seeds of |m(t, γ) γ_x^{b/(pc)} - m₀(x_i)|, the conservation-along-
/// flow identity. m is sampled spectrally at the curve positions.
double flow_conservation_residual(const TrajectorySet& traj, const Field& m_now,
                                  const Field& m0, const Parameters& par,
                                  const Spectral& sp);

} // namespace bfam

#endif
