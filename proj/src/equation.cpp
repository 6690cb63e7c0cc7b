#include "bfam/equation.hpp"

namespace bfam {

Field Equation::product(Field f) const {
    return dealias_ ? sp_.dealias(f) : std::move(f);
}

Field Equation::advective(const Field& u) const {
    const Field ux = sp_.derivative(u, 1);
    return par_.c * product(pow_field(u, par_.p) * ux);
}

Field Equation::f_family(const Field& u) const {
    require_finite(u, "Equation::f_family");
    const Field ux = sp_.derivative(u, 1);
    const double a1 = (3.0 * par_.p * par_.c - par_.b) / 2.0;
    const double a2 = par_.b / (par_.p + 1);
    Field f = a1 * (pow_field(u, par_.p - 1) * (ux * ux)) + a2 * pow_field(u, par_.p + 1);
    return product(std::move(f));
}

Field Equation::F_family(const Field& u) const {
    return sp_.grad_inv(f_family(u));
}

Field Equation::rhs_nonlocal(const Field& u) const {
    require_finite(u, "Equation::rhs_nonlocal");
    Field out = -1.0 * advective(u) - sp_.grad_inv(f_family(u));
    const double a3 = (par_.p - 1) * (par_.b - par_.p * par_.c) / 2.0;
    if (a3 != 0.0) {
        // only reached for p >= 2, so u^{p-2} is a plain product
        const Field ux = sp_.derivative(u, 1);
        const Field cubic = product(pow_field(u, par_.p - 2) * (ux * ux * ux));
        out = out - a3 * sp_.helmholtz_invert(cubic);
    }
    require_finite(out, "Equation::rhs_nonlocal");
    return out;
}

Field Equation::rhs_momentum(const Field& m) const {
    require_finite(m, "Equation::rhs_momentum");
    const Field u = sp_.helmholtz_invert(m);
    const Field ux = sp_.derivative(u, 1);
    const Field mx = sp_.derivative(m, 1);
    Field out = -par_.c * product(pow_field(u, par_.p) * mx) -
                par_.b * product(pow_field(u, par_.p - 1) * ux * m);
    require_finite(out, "Equation::rhs_momentum");
    return out;
}

} // namespace bfam
