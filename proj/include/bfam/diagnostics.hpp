#ifndef BFAM_DIAGNOSTICS_HPP
#define BFAM_DIAGNOSTICS_HPP

#include <map>
#include <string>
#include <vector>

#include "bfam/equation.hpp"

namespace bfam {

/// Per-step record of everything the theory says is conserved, signed,
/// or bounded. The CSV schema exposes the first 13 fields; the remaining
/// ones feed the boundedness and growth checks.
struct InvariantReport {
    double t = 0.0;
    double H1 = 0.0;        // ∫u
    double H2 = 0.0;        // (1/2)∫(u² + u_x²)
    double M_total = 0.0;   // ∫m
    double L1_m = 0.0;      // ∫|m|
    double I_u = 0.0;       // ∫( (u²+u_x²)/4 + (u_x²+u_xx²)/2 + (u_xx²+u_xxx²)/2 )
    double sup_u = 0.0;
    double sup_ux = 0.0;
    double min_m = 0.0;
    double max_m = 0.0;
    double f_min = 0.0;
    double f_max = 0.0;
    double eq_identity_residual = 0.0; // max|F + u_t + c u^p u_x|

    // extras, not part of the CSV schema
    double L1_u = 0.0;      // ∫|u|
    double min_u = 0.0;
    double max_u = 0.0;
    double dI_rhs = 0.0;    // -2c∫u_x u_xx² - (c/2)∫u_x u_xxx²
};

InvariantReport report(const Equation& eq, const State& s);

/// Max relative drift |Q(t)-Q(0)| / max(|Q(0)|, eps) for each invariant whose
/// conservation the parameter flags imply. `sign_preserved_data` marks runs
/// whose initial momentum is one-signed (enables the L1_m entry).
std::map<std::string, double> drift(const std::vector<InvariantReport>& series,
                                    const Parameters& par, bool sign_preserved_data);

struct GrowthCheck {
    bool pass = false;
    double max_identity_residual = 0.0; // |d/dt I - dI_rhs| by centered differences
    double A_hat = 0.0;                  // 2 * observed sup||u_x||_inf
    bool envelope_ok = false;            // I(t) <= I(0) exp(c A_hat t) (1 + 1e-6)
};

/// Only meaningful in the b = 0, p = 1 regime (throws otherwise): checks the
/// exact-derivative identity for I(u) and the Gronwall growth envelope built
/// from the run's own slope bound.
GrowthCheck growth_envelope_check(const std::vector<InvariantReport>& series,
                                  const Parameters& par);

struct UxBoundCheck {
    bool pass = false;
    double observed_K = 0.0; // max over time of sup_ux
    double bound = 0.0;      // C1 + max_t ∫|u|, C1 = ∫|m0|
};

/// Slope bound for one-signed momentum in the b = 0, p = 1 regime. Throws if
/// m0 changes sign.
UxBoundCheck ux_bound_check(const std::vector<InvariantReport>& series, const Field& m0,
                            const Parameters& par);

struct BreakingStatus {
    bool bounded = true;
    double t_star = 0.0; // first time sup_u + sup_ux crossed the threshold
};

/// Tracks S(t) = sup|u| + sup|u_x| against the threshold M.
BreakingStatus breaking_monitor(const std::vector<InvariantReport>& series, double M);

struct ProbeRecord {
    double max_u_window = 0.0;    // (i)  max|u| on [a,b]
    double F_gap = 0.0;           // (ii) F(b) - F(a)
    double window_integral = 0.0; // (iii) ∫_a^b Λ⁻²f dx
    double max_u_global = 0.0;    // (iv)
};

/// Unique-continuation probe over the window [a,b] ⊂ [0,1). Requires H1 or H2
/// parameters and a < b.
ProbeRecord continuation_probe(const Equation& eq, const State& s, double a, double b);

} // namespace bfam

#endif
