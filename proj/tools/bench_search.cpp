// Benchmark: serial reference vs OpenMP-parallel search kernels.
//
// Both paths scan the same (branch, corner choice) and vector grids and
// merge deterministically, so the reports must agree exactly; this target
// prints timings side by side and fails loudly on any mismatch.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tricoord/builtins.hpp"
#include "tricoord/crushing.hpp"
#include "tricoord/reducibility.hpp"

using namespace tricoord;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_decide(const std::string& surface, const std::string& word, int jobs) {
    GeneratorTable table = builtin_table(surface);
    MappingClassPath path = compile(parse_word(word), table);

    auto t0 = Clock::now();
    ReducibilityReport serial = decide(path, SearchOptions{true, 1});
    const double t_serial = ms_since(t0);

    t0 = Clock::now();
    ReducibilityReport parallel = decide(path, SearchOptions{true, jobs});
    const double t_parallel = ms_since(t0);

    if (serial.reducible != parallel.reducible || serial.certificate != parallel.certificate) {
        std::cerr << "MISMATCH between serial and parallel decide on " << surface << " " << word
                  << "\n";
        std::exit(1);
    }
    std::cout << "decide  " << surface << "  " << word << "  verdict="
              << (serial.reducible ? "reducible" : "irreducible")
              << "  branches=" << serial.branches_explored << "  serial=" << t_serial
              << "ms  parallel(" << jobs << ")=" << t_parallel << "ms\n";
}

void bench_brute(const std::string& surface, const std::string& word, long max_entry, int jobs) {
    GeneratorTable table = builtin_table(surface);
    MappingClassPath path = compile(parse_word(word), table);

    auto t0 = Clock::now();
    auto serial = brute_force_invariant(path, max_entry, SearchOptions{true, 1});
    const double t_serial = ms_since(t0);

    t0 = Clock::now();
    auto parallel = brute_force_invariant(path, max_entry, SearchOptions{true, jobs});
    const double t_parallel = ms_since(t0);

    if (serial != parallel) {
        std::cerr << "MISMATCH between serial and parallel brute force on " << surface << " "
                  << word << "\n";
        std::exit(1);
    }
    std::cout << "brute   " << surface << "  " << word << "  max_entry=" << max_entry << "  hit="
              << (serial ? vector_to_string(*serial) : std::string("none"))
              << "  serial=" << t_serial << "ms  parallel(" << jobs << ")=" << t_parallel
              << "ms\n";
}

} // namespace

int main(int argc, char** argv) {
    int jobs = 4;
#ifdef _OPENMP
    jobs = std::max(2, omp_get_max_threads());
#endif
    if (argc > 1) jobs = std::stoi(argv[1]);
    std::cout << "jobs for parallel runs: " << jobs << "\n";

    bench_decide("S_1_1", "a", jobs);
    bench_decide("S_1_1", "a.b", jobs);
    bench_decide("S_1_1", "a.~b", jobs);
    bench_decide("S_1_2", "a", jobs);
    bench_decide("S_0_4", "a.a", jobs);

    bench_brute("S_1_1", "a.~b", 12, jobs);
    bench_brute("S_1_1", "a.a", 10, jobs);
    bench_brute("S_1_2", "a", 3, jobs);
    return 0;
}
