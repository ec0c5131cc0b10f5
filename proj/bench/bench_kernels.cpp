#include "concavlab/inequalities.hpp"
#include "concavlab/kernels.hpp"
#include "concavlab/local_analysis.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace concavlab;

namespace {

double time_it(const std::function<void()>& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void compare(const char* name, const std::function<void(Backend)>& fn, int reps) {
    const double serial = time_it([&] { fn(Backend::Serial); }, reps);
    const double parallel = time_it([&] { fn(Backend::Parallel); }, reps);
    std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2f\n", name, serial, parallel, serial / parallel);
}

} // namespace

int main() {
    std::printf("workers: %d\n", worker_count());
    const SphericalField y = harmonic(6, 3);
    compare("second variation 128x256", [&](Backend b) { second_variation_surface(y, {}, b); }, 3);
    const Polytope p = random_polytope(3, 11);
    compare("mean width grid 64x128", [&](Backend b) { mean_width_grid(p, 64, 128, b); }, 5);
    compare("ks sweep, 50 pairs", [&](Backend b) { check_sweep("ks", "volume", 50, 1, 3, b); }, 1);
    compare("mu-concavity sweep, 500", [&](Backend b) { check_sweep("mu-concavity", "lambda1", 500, 1, 3, b); }, 3);
    compare("quant-ks sweep, 10 pairs", [&](Backend b) { check_sweep("quant-ks", "volume", 10, 1, 3, b); }, 1);
}
