#ifndef BFAM_GRID_HPP
#define BFAM_GRID_HPP

#include <cmath>
#include <vector>

#include "bfam/errors.hpp"

namespace bfam {

/// Equispaced periodic grid on [0,1): node j sits at x_j = j/n.
struct Grid {
    int n = 0;
    double dx = 0.0;

    Grid() = default;
    explicit Grid(int n_) : n(n_), dx(1.0 / n_) {
        if (n_ < 8 || n_ % 2 != 0)
            throw precondition_error("Grid: n must be even and >= 8, got " + std::to_string(n_));
    }

    double node(int j) const { return static_cast<double>(j) * dx; }
    bool operator==(const Grid& o) const { return n == o.n; }
};

/// Real samples of a periodic function at the grid nodes.
struct Field {
    Grid grid;
    std::vector<double> v;

    Field() = default;
    explicit Field(Grid g) : grid(g), v(static_cast<size_t>(g.n), 0.0) {}
    Field(Grid g, std::vector<double> values) : grid(g), v(std::move(values)) {
        if (static_cast<int>(v.size()) != g.n)
            throw precondition_error("Field: sample count does not match grid");
    }

    int size() const { return grid.n; }
    double& operator[](int j) { return v[static_cast<size_t>(j)]; }
    double operator[](int j) const { return v[static_cast<size_t>(j)]; }
};

/// x reduced to [0,1).
inline double wrap_unit(double x) { return x - std::floor(x); }

inline bool all_finite(const Field& f) {
    for (double x : f.v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline void require_finite(const Field& f, const char* who) {
    if (!all_finite(f)) throw numeric_error(std::string(who) + ": non-finite field values");
}

inline double max_abs(const Field& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
}

inline double min_value(const Field& f) {
    double m = f.v.empty() ? 0.0 : f.v[0];
    for (double x : f.v) m = std::min(m, x);
    return m;
}

inline double max_value(const Field& f) {
    double m = f.v.empty() ? 0.0 : f.v[0];
    for (double x : f.v) m = std::max(m, x);
    return m;
}

/// Grid quadrature of ∫₀¹ f dx (exact for resolvable trigonometric polynomials).
inline double mean(const Field& f) {
    double s = 0.0;
    for (double x : f.v) s += x;
    return s / f.grid.n;
}

inline double integral(const Field& f) { return mean(f); }

inline double integral_abs(const Field& f) {
    double s = 0.0;
    for (double x : f.v) s += std::abs(x);
    return s / f.grid.n;
}

inline Field operator+(Field a, const Field& b) {
    for (int j = 0; j < a.size(); ++j) a[j] += b[j];
    return a;
}

inline Field operator-(Field a, const Field& b) {
    for (int j = 0; j < a.size(); ++j) a[j] -= b[j];
    return a;
}

inline Field operator*(double s, Field a) {
    for (double& x : a.v) x *= s;
    return a;
}

/// Pointwise product in physical space.
inline Field operator*(Field a, const Field& b) {
    for (int j = 0; j < a.size(); ++j) a[j] *= b[j];
    return a;
}

/// Pointwise integer power (q >= 0).
inline Field pow_field(const Field& f, int q) {
    Field out(f.grid);
    for (int j = 0; j < f.size(); ++j) out[j] = std::pow(f[j], q);
    return out;
}

} // namespace bfam

#endif
