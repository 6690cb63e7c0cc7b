// Timing comparison of the serial and OpenMP kernel-convolution inverses,
// with the spectral inverse as a baseline. Not a correctness test (the unit
// tests cover that); run by hand to gauge the parallel speedup.
#include <chrono>
#include <cstdio>

#include "bfam/convolution.hpp"
#include "bfam/spectral.hpp"

using namespace bfam;

namespace {

template <class Fn>
double time_ms(Fn&& fn, int reps) {
    // warm-up
    fn();
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main() {
    std::printf("%8s %14s %14s %10s %14s\n", "n", "serial [ms]", "openmp [ms]", "speedup",
                "spectral [ms]");
    for (int n : {256, 1024, 4096, 8192}) {
        const Grid grid(n);
        const Spectral sp(grid);
        const Field f = random_band_limited(grid, n / 4, 7u);
        const int reps = n <= 1024 ? 50 : 10;

        volatile double sink = 0.0;
        const double serial =
            time_ms([&] { sink = helmholtz_invert_convolution_serial(f).v[0]; }, reps);
        const double parallel = time_ms([&] { sink = helmholtz_invert_convolution(f).v[0]; }, reps);
        const double spectral = time_ms([&] { sink = sp.helmholtz_invert(f).v[0]; }, reps);
        std::printf("%8d %14.3f %14.3f %9.2fx %14.4f\n", n, serial, parallel, serial / parallel,
                    spectral);
        (void)sink;
    }
    return 0;
}
