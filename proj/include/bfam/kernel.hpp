#ifndef BFAM_KERNEL_HPP
#define BFAM_KERNEL_HPP

#include <cmath>

namespace bfam {

// Periodic Green's function of 1 - d^2/dx^2 on the unit circle and its
// derivative. The argument is reduced to [0,1) before the cosh/sinh call,
// so any real x is safe from overflow.
namespace kernel {

inline double g(double x) {
    const double r = x - std::floor(x);
    return std::cosh(r - 0.5) / (2.0 * std::sinh(0.5));
}

inline double dg(double x) {
    const double r = x - std::floor(x);
    return std::sinh(r - 0.5) / (2.0 * std::sinh(0.5));
}

/// Peak value g(0) = cosh(1/2) / (2 sinh(1/2)).
inline double peak() { return std::cosh(0.5) / (2.0 * std::sinh(0.5)); }

} // namespace kernel
} // namespace bfam

#endif
