#include "bfam/spectral.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>
#include <random>

namespace bfam {

namespace {
// FFTW plan creation is not thread-safe; execution through the planned
// buffers is per-instance.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

Spectral::Spectral(Grid grid)
    : grid_(grid), rbuf_(static_cast<size_t>(grid.n)),
      cbuf_(static_cast<size_t>(grid.n / 2 + 1)) {
    std::lock_guard lock(planner_mutex());
    fwd_ = fftw_plan_dft_r2c_1d(grid_.n, rbuf_.data(),
                                reinterpret_cast<fftw_complex*>(cbuf_.data()), FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_c2r_1d(grid_.n, reinterpret_cast<fftw_complex*>(cbuf_.data()),
                                rbuf_.data(), FFTW_ESTIMATE);
}

Spectral::~Spectral() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
}

std::vector<std::complex<double>> Spectral::analyze(const Field& f) const {
    require_finite(f, "Spectral::analyze");
    if (!(f.grid == grid_)) throw precondition_error("Spectral::analyze: grid mismatch");
    std::copy(f.v.begin(), f.v.end(), rbuf_.begin());
    fftw_execute(fwd_);
    std::vector<std::complex<double>> out(cbuf_.size());
    const double ninv = 1.0 / grid_.n;
    for (size_t k = 0; k < out.size(); ++k) out[k] = cbuf_[k] * ninv;
    return out;
}

Field Spectral::synthesize(const std::vector<std::complex<double>>& coeffs) const {
    if (coeffs.size() != cbuf_.size())
        throw precondition_error("Spectral::synthesize: coefficient count mismatch");
    std::copy(coeffs.begin(), coeffs.end(), cbuf_.begin());
    fftw_execute(bwd_);
    Field out(grid_);
    std::copy(rbuf_.begin(), rbuf_.end(), out.v.begin());
    require_finite(out, "Spectral::synthesize");
    return out;
}

template <class Symbol>
Field Spectral::apply_symbol(const Field& f, const char* who, Symbol&& sym) const {
    require_finite(f, who);
    if (!(f.grid == grid_)) throw precondition_error(std::string(who) + ": grid mismatch");
    std::copy(f.v.begin(), f.v.end(), rbuf_.begin());
    fftw_execute(fwd_);
    const double ninv = 1.0 / grid_.n;
    const int nk = grid_.n / 2;
    for (int k = 0; k <= nk; ++k)
        cbuf_[static_cast<size_t>(k)] *= sym(k) * ninv;
    fftw_execute(bwd_);
    Field out(grid_);
    std::copy(rbuf_.begin(), rbuf_.end(), out.v.begin());
    require_finite(out, who);
    return out;
}

Field Spectral::derivative(const Field& f, int order) const {
    if (order < 1 || order > 4)
        throw precondition_error("Spectral::derivative: order must be in 1..4");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const int nyquist = grid_.n / 2;
    return apply_symbol(f, "Spectral::derivative",
                        [order, nyquist](int k) -> std::complex<double> {
                            if (order % 2 == 1 && k == nyquist) return 0.0;
                            const std::complex<double> ik(0.0, two_pi * k);
                            std::complex<double> s = 1.0;
                            for (int q = 0; q < order; ++q) s *= ik;
                            return s;
                        });
}

Field Spectral::helmholtz_apply(const Field& f) const {
    return apply_symbol(f, "Spectral::helmholtz_apply", [](int k) -> std::complex<double> {
        constexpr double c = 4.0 * std::numbers::pi * std::numbers::pi;
        return 1.0 + c * k * k;
    });
}

Field Spectral::helmholtz_invert(const Field& f) const {
    return apply_symbol(f, "Spectral::helmholtz_invert", [](int k) -> std::complex<double> {
        constexpr double c = 4.0 * std::numbers::pi * std::numbers::pi;
        return 1.0 / (1.0 + c * k * k);
    });
}

Field Spectral::grad_inv(const Field& f) const {
    const int nyquist = grid_.n / 2;
    return apply_symbol(f, "Spectral::grad_inv", [nyquist](int k) -> std::complex<double> {
        if (k == nyquist) return 0.0;
        constexpr double c = 4.0 * std::numbers::pi * std::numbers::pi;
        const double two_pi_k = 2.0 * std::numbers::pi * k;
        return std::complex<double>(0.0, two_pi_k) / (1.0 + c * k * k);
    });
}

Field Spectral::dealias(const Field& f) const {
    const int cutoff = grid_.n / 3;
    return apply_symbol(f, "Spectral::dealias", [cutoff](int k) -> std::complex<double> {
        return k > cutoff ? 0.0 : 1.0;
    });
}

double Spectral::eval(std::span<const std::complex<double>> coeffs, double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const size_t nk = coeffs.size() - 1; // n/2
    double s = coeffs[0].real();
    for (size_t k = 1; k < nk; ++k) {
        const double phase = two_pi * static_cast<double>(k) * x;
        s += 2.0 * (coeffs[k].real() * std::cos(phase) - coeffs[k].imag() * std::sin(phase));
    }
    s += coeffs[nk].real() * std::cos(two_pi * static_cast<double>(nk) * x);
    return s;
}

double Spectral::eval_derivative(std::span<const std::complex<double>> coeffs, double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const size_t nk = coeffs.size() - 1;
    double s = 0.0;
    for (size_t k = 1; k < nk; ++k) {
        const double w = two_pi * static_cast<double>(k);
        const double phase = w * x;
        s += -2.0 * w * (coeffs[k].real() * std::sin(phase) + coeffs[k].imag() * std::cos(phase));
    }
    return s;
}

Field random_band_limited(Grid grid, int kmax, unsigned seed, double amplitude, double offset) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> a(static_cast<size_t>(kmax) + 1), ph(static_cast<size_t>(kmax) + 1);
    for (int k = 1; k <= kmax; ++k) {
        a[static_cast<size_t>(k)] = unif(rng) / k;
        ph[static_cast<size_t>(k)] = std::numbers::pi * unif(rng);
    }
    Field out(grid);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int j = 0; j < grid.n; ++j) {
        const double x = grid.node(j);
        double s = offset;
        for (int k = 1; k <= kmax; ++k)
            s += amplitude * a[static_cast<size_t>(k)] *
                 std::cos(two_pi * k * x + ph[static_cast<size_t>(k)]);
        out[j] = s;
    }
    return out;
}

} // namespace bfam
