// Serial reference loops vs the OpenMP kernels on the three sweep workloads.
//
// Usage: bench_kernels [repeats]

#include "qrabi/entanglement.hpp"
#include "qrabi/parallel.hpp"
#include "qrabi/phasespace.hpp"
#include "qrabi/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace qrabi;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, int repeats, const std::function<void(Execution)>& kernel) {
    const double ser = best_of(repeats, [&] { kernel(Execution::serial); });
    const double par = best_of(repeats, [&] { kernel(Execution::parallel); });
    std::printf("%-34s serial %8.3f s  parallel %8.3f s  speedup %5.2fx\n", name, ser, par, ser / par);
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::printf("threads: %d, best of %d\n", thread_count(), repeats);

    ModelConfig cfg;
    cfg.trunc = FockTruncation(15);
    const auto grid = uniform_grid(0.0, 3.0, 201);

    report("spectrum sweep n_max=15, 201 g", repeats,
           [&](Execution ex) { sweep_spectrum(cfg, grid, 30, ex); });

    ModelConfig big = cfg;
    big.trunc = FockTruncation(60);
    report("spectrum sweep n_max=60, 201 g", repeats,
           [&](Execution ex) { sweep_spectrum(big, grid, 8, ex); });

    report("entropy sweep n_max=15, 201 g", repeats, [&](Execution ex) { entropy_sweep(cfg, grid, ex); });

    ModelConfig cat = cfg.with_g(3.0);
    report("Wigner 201x201, g=3", repeats,
           [&](Execution ex) { ground_state_wigner(cat, QuadratureGrid::square(6.0, 201), ex); });
    return 0;
}
