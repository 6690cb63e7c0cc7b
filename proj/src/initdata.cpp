#include "bfam/initdata.hpp"

#include <cmath>
#include <numbers>

#include "bfam/kernel.hpp"

namespace bfam {

InitKind init_kind_from_string(const std::string& s) {
    if (s == "fourier-modes") return InitKind::fourier_modes;
    if (s == "momentum-first") return InitKind::momentum_first;
    if (s == "gaussian-bump-periodic") return InitKind::gaussian_bump_periodic;
    if (s == "peakon-profile") return InitKind::peakon_profile;
    throw config_error("unknown init kind '" + s + "'");
}

SignConstraint sign_constraint_from_string(const std::string& s) {
    if (s == "none") return SignConstraint::none;
    if (s == "non-negative") return SignConstraint::non_negative;
    if (s == "non-positive") return SignConstraint::non_positive;
    throw config_error("unknown sign constraint '" + s + "'");
}

void InitSpec::validate() const {
    if (!std::isfinite(offset) || !std::isfinite(amplitude))
        throw config_error("InitSpec: non-finite offset/amplitude");
    if (mode < 0) throw config_error("InitSpec: mode must be >= 0");
    if (kind == InitKind::gaussian_bump_periodic && !(width > 0.0))
        throw config_error("InitSpec: gaussian width must be > 0");
}

namespace {

Field cosine_profile(const Grid& grid, double offset, double amplitude, int mode) {
    Field f(grid);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int j = 0; j < grid.n; ++j)
        f[j] = offset + amplitude * std::cos(two_pi * mode * grid.node(j));
    return f;
}

// Sum of image Gaussians; 5 images on each side is well past double precision
// for widths below ~0.2.
Field gaussian_profile(const Grid& grid, double offset, double amplitude, double center,
                       double width) {
    Field f(grid);
    for (int j = 0; j < grid.n; ++j) {
        const double x = grid.node(j);
        double s = 0.0;
        for (int im = -5; im <= 5; ++im) {
            const double d = (x - center + im) / width;
            s += std::exp(-0.5 * d * d);
        }
        f[j] = offset + amplitude * s;
    }
    return f;
}

void check_sign(const InitSpec& spec, double mn, double mx, double scale) {
    const double tol = 1e-12 * std::max(1.0, scale);
    if (spec.sign == SignConstraint::non_negative && mn < -tol)
        throw config_error("init: momentum violates the non-negative sign constraint (min m0 = " +
                           std::to_string(mn) + ")");
    if (spec.sign == SignConstraint::non_positive && mx > tol)
        throw config_error("init: momentum violates the non-positive sign constraint (max m0 = " +
                           std::to_string(mx) + ")");
}

} // namespace

InitData build(const InitSpec& spec, const Spectral& sp) {
    spec.validate();
    const Grid& grid = sp.grid();
    InitData out;

    switch (spec.kind) {
        case InitKind::momentum_first: {
            const Field m0 = cosine_profile(grid, spec.offset, spec.amplitude, spec.mode);
            out.u0 = sp.helmholtz_invert(m0);
            out.m0_min = min_value(m0);
            out.m0_max = max_value(m0);
            break;
        }
        case InitKind::fourier_modes:
            out.u0 = cosine_profile(grid, spec.offset, spec.amplitude, spec.mode);
            break;
        case InitKind::gaussian_bump_periodic:
            out.u0 = gaussian_profile(grid, spec.offset, spec.amplitude, spec.center, spec.width);
            break;
        case InitKind::peakon_profile: {
            out.u0 = Field(grid);
            for (int j = 0; j < grid.n; ++j)
                out.u0[j] = spec.amplitude * kernel::g(grid.node(j) - spec.center);
            break;
        }
    }
    if (spec.kind != InitKind::momentum_first) {
        const Field m0 = sp.helmholtz_apply(out.u0);
        out.m0_min = min_value(m0);
        out.m0_max = max_value(m0);
    }
    check_sign(spec, out.m0_min, out.m0_max, std::max(std::abs(out.m0_min), std::abs(out.m0_max)));
    return out;
}

} // namespace bfam
