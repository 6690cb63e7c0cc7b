#ifndef BFAM_INITDATA_HPP
#define BFAM_INITDATA_HPP

#include <string>

#include "bfam/spectral.hpp"

namespace bfam {

enum class InitKind { fourier_modes, momentum_first, gaussian_bump_periodic, peakon_profile };
enum class SignConstraint { none, non_negative, non_positive };

InitKind init_kind_from_string(const std::string& s);
SignConstraint sign_constraint_from_string(const std::string& s);

/// Named initial-condition recipe.
///   fourier-modes:           u0 = offset + amplitude * cos(2π mode x)
///   momentum-first:          m0 = offset + amplitude * cos(2π mode x), u0 = Λ⁻²m0
///   gaussian-bump-periodic:  u0 = offset + amplitude * periodized Gaussian(center, width)
///   peakon-profile:          u0 = amplitude * g(x - center); stress-test data only,
///                            its momentum is a point mass below the smooth class
struct InitSpec {
    InitKind kind = InitKind::fourier_modes;
    double offset = 0.0;
    double amplitude = 0.1;
    int mode = 1;
    double center = 0.5;
    double width = 0.05;
    SignConstraint sign = SignConstraint::none;

    void validate() const;
};

struct InitData {
    Field u0;
    double m0_min = 0.0; // sign certificate of the constructed momentum
    double m0_max = 0.0;
};

/// Builds u0 on the grid. A sign-constrained spec whose momentum violates the
/// constraint is a config_error, not a silent fixup.
InitData build(const InitSpec& spec, const Spectral& sp);

} // namespace bfam

#endif
