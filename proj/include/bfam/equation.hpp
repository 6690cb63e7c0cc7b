#ifndef BFAM_EQUATION_HPP
#define BFAM_EQUATION_HPP

#include "bfam/grid.hpp"
#include "bfam/parameters.hpp"
#include "bfam/spectral.hpp"

namespace bfam {

/// Time-stamped solution sample.
struct State {
    double t = 0.0;
    Field u;

    State() = default;
    State(double t_, Field u_) : t(t_), u(std::move(u_)) {}
};

/// Right-hand sides of both formulations of the equation on one grid,
/// plus the unique-continuation functions f and F.
///
/// Non-local u-form:
///   u_t = -c u^p u_x - ∂xΛ⁻²( (3pc-b)/2 u^{p-1}u_x² + b/(p+1) u^{p+1} )
///         - (p-1)(b-pc)/2 Λ⁻²( u^{p-2}u_x³ )
/// (last term identically skipped when its coefficient vanishes, so u^{p-2}
/// is never formed for p = 1).
///
/// Momentum transport form, with u = Λ⁻²m:
///   m_t = -c u^p m_x - b u^{p-1} u_x m
class Equation {
  public:
    Equation(Grid grid, Parameters par, bool dealias_products = true)
        : par_(par), dealias_(dealias_products), sp_(grid) {
        par.validate();
    }

    const Parameters& parameters() const { return par_; }
    const Spectral& spectral() const { return sp_; }
    const Grid& grid() const { return sp_.grid(); }
    bool dealias_enabled() const { return dealias_; }

    Field rhs_nonlocal(const Field& u) const;
    Field rhs_momentum(const Field& m) const;

    /// f(x) = (3pc-b)/2 u^{p-1}u_x² + b/(p+1) u^{p+1}.
    Field f_family(const Field& u) const;
    /// F(x) = ∂xΛ⁻² f(x).
    Field F_family(const Field& u) const;

    /// c u^p u_x, the advective flux shared by the RHS and the identity checks.
    Field advective(const Field& u) const;

  private:
    Field product(Field f) const; // optional 2/3-rule truncation

    Parameters par_;
    bool dealias_;
    Spectral sp_;
};

} // namespace bfam

#endif
