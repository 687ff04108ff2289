// Benchmark: serial reference witness scan vs the OpenMP kernel, plus the
// one-time witness-chain construction.  The two scans must return identical
// splittings; this tool reports wall times only.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polytopal/necklace.hpp"

using namespace polytopal;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_instance(const std::string& beads, int q, int reps) {
    Necklace nk = Necklace::from_string(beads);
    std::cout << "necklace " << beads << " (n=" << nk.n << ", t=" << nk.t << "), q=" << q << "\n";

    auto t0 = Clock::now();
    SplitOptions serial;
    SplitOutcome first = find_fair_split(nk, q, serial);
    std::cout << "  first solve (builds witness chains): " << ms_since(t0) << " ms\n";

    t0 = Clock::now();
    for (int i = 0; i < reps; ++i) find_fair_split(nk, q, serial);
    double serial_ms = ms_since(t0) / reps;

    SplitOptions parallel;
    parallel.parallel = true;
    t0 = Clock::now();
    SplitOutcome par = find_fair_split(nk, q, parallel);
    for (int i = 1; i < reps; ++i) find_fair_split(nk, q, parallel);
    double parallel_ms = ms_since(t0) / reps;

    if (first.splitting.owner_of_bead() != par.splitting.owner_of_bead()) {
        std::cout << "  ERROR: serial and parallel scans disagree\n";
        return;
    }
    std::cout << "  witness scan: serial " << serial_ms << " ms, parallel " << parallel_ms
              << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both scans run serially\n";
#endif
    int reps = argc > 1 ? std::stoi(argv[1]) : 3;
    bench_instance("abab", 2, reps);
    bench_instance("aabbab", 3, reps);
    bench_instance("abababab", 3, reps);
    bench_instance("babbabab", 3, reps);
    return 0;
}
