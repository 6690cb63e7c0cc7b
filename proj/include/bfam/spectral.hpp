#ifndef BFAM_SPECTRAL_HPP
#define BFAM_SPECTRAL_HPP

#include <complex>
#include <span>
#include <vector>

#include "bfam/grid.hpp"

struct fftw_plan_s;

namespace bfam {

/// Fourier-collocation transforms and operators on one grid.
///
/// Coefficients use the normalized half-complex convention: for a real field,
/// analyze() returns c_0..c_{n/2} with
///   u(x) = Re c_0 + sum_{k=1}^{n/2-1} 2 Re(c_k e^{2πikx}) + Re(c_{n/2}) cos(πnx).
///
/// Instances own FFTW plans and scratch buffers: one instance must not be used
/// from two threads at once. All operations leave their inputs untouched.
class Spectral {
  public:
    explicit Spectral(Grid grid);
    ~Spectral();
    Spectral(const Spectral&) = delete;
    Spectral& operator=(const Spectral&) = delete;

    const Grid& grid() const { return grid_; }

    std::vector<std::complex<double>> analyze(const Field& f) const;
    Field synthesize(const std::vector<std::complex<double>>& coeffs) const;

    /// Spectral derivative of the given order (1..4). Odd orders zero the
    /// Nyquist mode to keep the result real-symmetric.
    Field derivative(const Field& f, int order) const;

    /// (1 - d^2/dx^2) f, mode k scaled by 1 + 4π²k².
    Field helmholtz_apply(const Field& f) const;

    /// Inverse of helmholtz_apply, mode k divided by 1 + 4π²k².
    Field helmholtz_invert(const Field& f) const;

    /// d/dx (1 - d^2/dx^2)^{-1} f.
    Field grad_inv(const Field& f) const;

    /// 2/3-rule truncation: zero every mode with k > n/3.
    Field dealias(const Field& f) const;

    /// Trigonometric interpolation of the field with the given coefficients
    /// at an arbitrary point x (any real, reduced mod 1).
    static double eval(std::span<const std::complex<double>> coeffs, double x);

    /// Interpolated first derivative (Nyquist mode dropped).
    static double eval_derivative(std::span<const std::complex<double>> coeffs, double x);

  private:
    template <class Symbol>
    Field apply_symbol(const Field& f, const char* who, Symbol&& sym) const;

    Grid grid_;
    fftw_plan_s* fwd_;
    fftw_plan_s* bwd_;
    mutable std::vector<double> rbuf_;
    mutable std::vector<std::complex<double>> cbuf_;
};

/// Deterministic random band-limited field: modes 1..kmax with unit-scale
/// coefficients drawn from the given seed, zero mean unless offset given.
Field random_band_limited(Grid grid, int kmax, unsigned seed, double amplitude = 1.0,
                          double offset = 0.0);

} // namespace bfam

#endif
