#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bfam/convolution.hpp"
#include "bfam/kernel.hpp"
#include "bfam/spectral.hpp"

using namespace bfam;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

Field sample(const Grid& g, double (*fn)(double)) {
    Field f(g);
    for (int j = 0; j < g.n; ++j) f[j] = fn(g.node(j));
    return f;
}
} // namespace

TEST_CASE("grid construction rejects odd or tiny n") {
    CHECK_THROWS_AS(Grid(7), precondition_error);
    CHECK_THROWS_AS(Grid(4), precondition_error);
    CHECK(Grid(8).dx == doctest::Approx(0.125));
}

TEST_CASE("derivative of sin(2pi x) is 2pi cos(2pi x)") {
    const Grid g(64);
    const Spectral sp(g);
    const Field f = sample(g, [](double x) { return std::sin(two_pi * x); });
    const Field d = sp.derivative(f, 1);
    for (int j = 0; j < g.n; ++j)
        CHECK(d[j] == doctest::Approx(two_pi * std::cos(two_pi * g.node(j))).epsilon(1e-13));
}

TEST_CASE("derivative of a constant vanishes at every order") {
    const Grid g(32);
    const Spectral sp(g);
    Field f(g);
    for (auto& x : f.v) x = 5.0;
    for (int order : {1, 2, 3, 4}) CHECK(max_abs(sp.derivative(f, order)) < 1e-12);
}

TEST_CASE("second derivative of cos(4pi x) matches finite differences") {
    const Grid g(256);
    const Spectral sp(g);
    const Field f = sample(g, [](double x) { return std::cos(2.0 * two_pi * x); });
    const Field d2 = sp.derivative(f, 2);
    // independent oracle: centered second difference
    double worst_fd = 0.0;
    for (int j = 0; j < g.n; ++j) {
        const int jm = (j + g.n - 1) % g.n, jp = (j + 1) % g.n;
        const double fd = (f[jp] - 2.0 * f[j] + f[jm]) / (g.dx * g.dx);
        worst_fd = std::max(worst_fd, std::abs(d2[j] - fd));
        CHECK(d2[j] ==
              doctest::Approx(-16.0 * std::numbers::pi * std::numbers::pi *
                              std::cos(2.0 * two_pi * g.node(j)))
                  .epsilon(1e-11));
    }
    // leading FD error for cos(4pi x): f'''' dx^2 / 12 = (256/12) pi^4 dx^2
    CHECK(worst_fd < (256.0 / 12.0) * std::pow(std::numbers::pi, 4) * g.dx * g.dx * 1.01);
}

TEST_CASE("derivative rejects bad order and non-finite input") {
    const Grid g(32);
    const Spectral sp(g);
    Field f(g);
    CHECK_THROWS_AS(sp.derivative(f, 0), precondition_error);
    CHECK_THROWS_AS(sp.derivative(f, 5), precondition_error);
    f[3] = std::nan("");
    CHECK_THROWS_AS(sp.derivative(f, 1), numeric_error);
}

TEST_CASE("helmholtz_apply on single modes applies the symbol") {
    const Grid g(64);
    const Spectral sp(g);
    Field c(g);
    for (auto& x : c.v) x = 3.25;
    CHECK(max_abs(sp.helmholtz_apply(c) - c) < 1e-13);

    const Field f1 = sample(g, [](double x) { return std::cos(two_pi * x); });
    const double s1 = 1.0 + 4.0 * std::numbers::pi * std::numbers::pi;
    CHECK(max_abs(sp.helmholtz_apply(f1) - s1 * f1) < 1e-10);

    const Field f3 = sample(g, [](double x) { return std::sin(3.0 * two_pi * x); });
    const double s3 = 1.0 + 36.0 * std::numbers::pi * std::numbers::pi;
    CHECK(max_abs(sp.helmholtz_apply(f3) - s3 * f3) < 1e-10);
}

TEST_CASE("spectral inverse: symbol, round trip, mean, smoothing") {
    const Grid g(128);
    const Spectral sp(g);
    const Field f1 = sample(g, [](double x) { return std::cos(two_pi * x); });
    const double s1 = 1.0 + 4.0 * std::numbers::pi * std::numbers::pi;
    CHECK(max_abs(sp.helmholtz_invert(f1) - (1.0 / s1) * f1) < 1e-14);

    for (unsigned seed : {1u, 2u, 3u}) {
        const Field f = random_band_limited(g, 30, seed, 1.0, 0.4);
        const Field rt = sp.helmholtz_apply(sp.helmholtz_invert(f));
        CHECK(max_abs(rt - f) / max_abs(f) < 1e-11);
        CHECK(mean(sp.helmholtz_invert(f)) == doctest::Approx(mean(f)).epsilon(1e-13));
        CHECK(max_abs(sp.helmholtz_invert(f)) <= max_abs(f) * (1.0 + 1e-13));
    }
}

TEST_CASE("kernel closed form: positivity, symmetry, unit mass, peak") {
    double mn = 1e300;
    for (int i = 0; i < 100000; ++i) mn = std::min(mn, kernel::g(i / 100000.0));
    CHECK(mn > 0.0);
    for (double x : {0.1, 0.25, 0.4}) CHECK(kernel::g(x) == doctest::Approx(kernel::g(1.0 - x)));
    double mass = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) mass += kernel::g((i + 0.5) / n) / n;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(kernel::peak() == doctest::Approx(1.08198).epsilon(1e-4));
    // argument reduction keeps huge arguments finite
    CHECK(std::isfinite(kernel::g(1e9 + 0.3)));
    CHECK(kernel::g(-0.7) == doctest::Approx(kernel::g(0.3)));
}

TEST_CASE("convolution inverse agrees with the spectral inverse") {
    const Grid g(256);
    const Spectral sp(g);

    Field one(g);
    for (auto& x : one.v) x = 1.0;
    // trapezoid error from the kernel's derivative jump is ~dx^2/12 = 1.27e-6 here
    CHECK(max_abs(helmholtz_invert_convolution(one) - one) < 2e-6);

    const Field f = sample(g, [](double x) { return std::cos(two_pi * x); });
    CHECK(max_abs(helmholtz_invert_convolution(f) - sp.helmholtz_invert(f)) < 1e-4);
}

TEST_CASE("convolution of a delta spike reproduces kernel samples") {
    const Grid g(256);
    Field spike(g);
    spike[40] = 1.0 / g.dx;
    const Field out = helmholtz_invert_convolution(spike);
    CHECK(max_value(out) == doctest::Approx(kernel::peak()).epsilon(1e-10));
    for (int j = 0; j < g.n; ++j)
        CHECK(out[j] == doctest::Approx(kernel::g(g.node(j) - g.node(40))).epsilon(1e-12));
}

TEST_CASE("convolution error drops with order >= 2 as n doubles") {
    std::vector<double> errs;
    for (int n : {64, 128, 256}) {
        const Grid g(n);
        const Spectral sp(g);
        const Field f = random_band_limited(g, 10, 5u);
        errs.push_back(max_abs(helmholtz_invert_convolution(f) - sp.helmholtz_invert(f)));
    }
    CHECK(std::log2(errs[0] / errs[1]) >= 1.9);
    CHECK(std::log2(errs[1] / errs[2]) >= 1.9);
}

TEST_CASE("openmp and serial convolution are bitwise identical") {
    const Grid g(512);
    const Field f = random_band_limited(g, 60, 11u);
    const Field a = helmholtz_invert_convolution(f);
    const Field b = helmholtz_invert_convolution_serial(f);
    for (int j = 0; j < g.n; ++j) CHECK(a[j] == b[j]);
}

TEST_CASE("grad_inv: symbol and the operator identity dx^2 inv = inv - id") {
    const Grid g(128);
    const Spectral sp(g);
    Field c(g);
    for (auto& x : c.v) x = 2.0;
    CHECK(max_abs(sp.grad_inv(c)) < 1e-13);

    const Field f = sample(g, [](double x) { return std::sin(two_pi * x); });
    const double s1 = 1.0 + 4.0 * std::numbers::pi * std::numbers::pi;
    Field expect(g);
    for (int j = 0; j < g.n; ++j) expect[j] = two_pi * std::cos(two_pi * g.node(j)) / s1;
    CHECK(max_abs(sp.grad_inv(f) - expect) < 1e-13);

    const Field r = random_band_limited(g, 40, 9u);
    const Field lhs = sp.derivative(sp.grad_inv(r), 1);
    const Field rhs = sp.helmholtz_invert(r) - r;
    CHECK(max_abs(lhs - rhs) < 1e-12);
}

TEST_CASE("trigonometric interpolation matches the samples and shifts") {
    const Grid g(64);
    const Spectral sp(g);
    const Field f = random_band_limited(g, 12, 3u, 1.0, 0.2);
    const auto c = sp.analyze(f);
    for (int j = 0; j < g.n; ++j)
        CHECK(Spectral::eval(c, g.node(j)) == doctest::Approx(f[j]).epsilon(1e-12));
    // derivative of the interpolant equals the spectral derivative at nodes
    const Field d = sp.derivative(f, 1);
    for (int j = 0; j < g.n; j += 7)
        CHECK(Spectral::eval_derivative(c, g.node(j)) == doctest::Approx(d[j]).epsilon(1e-10));
}
