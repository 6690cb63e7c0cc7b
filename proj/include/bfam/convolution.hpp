#ifndef BFAM_CONVOLUTION_HPP
#define BFAM_CONVOLUTION_HPP

#include "bfam/grid.hpp"

namespace bfam {

// Direct quadrature of (g * f)(x_j) = ∫ g(x_j - y) f(y) dy with the closed-form
// kernel. Trapezoidal rule on the periodic grid; the kernel's derivative jump
// at lag 0 limits it to 2nd order. Kept as an independent oracle against the
// spectral inverse, and as the project's OpenMP showcase kernel: each output
// node is an independent O(n) sum, so the parallel version is bitwise
// identical to the serial one.

/// Serial reference implementation.
Field helmholtz_invert_convolution_serial(const Field& f);

/// OpenMP-parallel over output nodes; same sums, same results.
Field helmholtz_invert_convolution(const Field& f);

} // namespace bfam

#endif
