#ifndef BFAM_PARAMETERS_HPP
#define BFAM_PARAMETERS_HPP

#include <cmath>
#include <string>

#include "bfam/errors.hpp"

namespace bfam {

/// The (b, c, p) triple of the family
///   u_t - u_txx + (b+c) u^p u_x = b u^{p-1} u_x u_xx + c u^p u_xxx.
/// b >= 0, c > 0, p a positive integer. Camassa-Holm is (2, 1, 1),
/// Degasperis-Procesi (3, 1, 1), Novikov-type (3, 1, 2).
struct Parameters {
    double b = 2.0;
    double c = 1.0;
    int p = 1;

    Parameters() = default;
    Parameters(double b_, double c_, int p_) : b(b_), c(c_), p(p_) { validate(); }

    void validate() const {
        if (!(b >= 0.0) || !std::isfinite(b))
            throw config_error("Parameters: b must be >= 0, got " + std::to_string(b));
        if (!(c > 0.0) || !std::isfinite(c))
            throw config_error("Parameters: c must be > 0, got " + std::to_string(c));
        if (p < 1) throw config_error("Parameters: p must be a positive integer");
    }

    /// p = 1 and b in [0, 3c].
    bool is_H1() const { return p == 1 && b >= 0.0 && b <= 3.0 * c; }
    /// b = p c.
    bool is_H2() const { return b == static_cast<double>(p) * c; }
    /// Mean of u (and of m) is conserved.
    bool conserves_mean() const { return p == 1 || is_H2(); }
    /// The H^1 energy (1/2)∫(u² + u_x²) is conserved.
    bool conserves_energy() const { return b == static_cast<double>(p + 1) * c; }
};

} // namespace bfam

#endif
