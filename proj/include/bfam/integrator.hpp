#ifndef BFAM_INTEGRATOR_HPP
#define BFAM_INTEGRATOR_HPP

#include <functional>
#include <string>
#include <vector>

#include "bfam/equation.hpp"

namespace bfam {

enum class Formulation { nonlocal_u, momentum_m };

Formulation formulation_from_string(const std::string& s);
std::string to_string(Formulation f);

struct StepConfig {
    double dt = 1e-4;
    double t_end = 1.0;
    Formulation formulation = Formulation::nonlocal_u;
    double cfl_limit = 0.5;          // dt <= cfl_limit * dx / max(eps, c*||u^p||_inf)
    double max_value_guard = 1e6;    // abort when ||u||_inf + ||u_x||_inf exceeds this

    void validate() const;
};

/// Stored solution snapshot.
struct Frame {
    double t;
    Field u;
};

struct EvolveResult {
    State final;
    std::vector<Frame> frames;   // every frame_stride steps, plus t=0 and t_end
    bool breakdown = false;      // guard tripped or CFL lost mid-run
    double breakdown_time = 0.0;
    long breakdown_step = -1;
    std::string breakdown_reason;
};

struct ObserveConfig {
    int frame_stride = 10;       // steps between stored frames
    // called on every stored frame (including the initial one)
    std::function<void(const State&)> on_frame;
};

/// One classical RK4 step on the configured formulation. Deterministic:
/// identical inputs give bit-identical outputs. Throws breakdown_error when
/// the runaway guard or the CFL bound is violated mid-step.
State step(const Equation& eq, const State& s, const StepConfig& cfg);

/// Iterate step() to t_end, storing frames at the configured stride. A guard
/// trip is a finding, not a failure: the partial result is returned with the
/// breakdown flag set. Other errors propagate annotated with the step index.
EvolveResult evolve(const Equation& eq, const State& s0, const StepConfig& cfg,
                    const ObserveConfig& obs = {});

} // namespace bfam

#endif
