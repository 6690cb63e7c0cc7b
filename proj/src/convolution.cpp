#include "bfam/convolution.hpp"

#include <vector>

#include "bfam/kernel.hpp"

namespace bfam {

namespace {
// Quadrature weights w_l = dx * g(l*dx) for lags l = 0..n-1.
std::vector<double> lag_weights(const Grid& grid) {
    std::vector<double> w(static_cast<size_t>(grid.n));
    for (int l = 0; l < grid.n; ++l)
        w[static_cast<size_t>(l)] = grid.dx * kernel::g(l * grid.dx);
    return w;
}

inline double node_sum(const std::vector<double>& w, const Field& f, int j) {
    const int n = f.grid.n;
    double s = 0.0;
    for (int l = 0; l < n; ++l) {
        const int lag = j - l + (j < l ? n : 0);
        s += w[static_cast<size_t>(lag)] * f[l];
    }
    return s;
}
} // namespace

Field helmholtz_invert_convolution_serial(const Field& f) {
    require_finite(f, "helmholtz_invert_convolution_serial");
    const auto w = lag_weights(f.grid);
    Field out(f.grid);
    for (int j = 0; j < f.grid.n; ++j) out[j] = node_sum(w, f, j);
    return out;
}

Field helmholtz_invert_convolution(const Field& f) {
    require_finite(f, "helmholtz_invert_convolution");
    const auto w = lag_weights(f.grid);
    Field out(f.grid);
    const int n = f.grid.n;
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) out[j] = node_sum(w, f, j);
    return out;
}

} // namespace bfam
