// Compares the serial reference scan against the OpenMP scan on one profile
// and checks that they agree exactly.
#include <omp.h>

#include <chrono>
#include <iostream>
#include <string>

#include <matint/matching.hpp>
#include <matint/profile.hpp>

using namespace matint;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string profile_str = "3:4";
    int repeat = 3;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--profile" && i + 1 < argc)
            profile_str = argv[++i];
        else if (arg == "--repeat" && i + 1 < argc)
            repeat = std::stoi(argv[++i]);
        else {
            std::cerr << "usage: bench_scan [--profile 3:4] [--repeat 3]\n";
            return 2;
        }
    }

    const DegreeProfile profile = DegreeProfile::parse(profile_str);
    std::cout << "profile " << profile.str() << ": " << matching_count(profile.half_edges())
              << " matchings, " << omp_get_max_threads() << " thread(s)\n";

    ScanStats serial, parallel;
    double t_serial = 1e300, t_parallel = 1e300;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        serial = scan_profile_serial(profile);
        auto t1 = std::chrono::steady_clock::now();
        parallel = scan_profile_parallel(profile);
        auto t2 = std::chrono::steady_clock::now();
        t_serial = std::min(t_serial, seconds(t0, t1));
        t_parallel = std::min(t_parallel, seconds(t1, t2));
    }

    std::cout << "serial   " << t_serial << " s\n";
    std::cout << "parallel " << t_parallel << " s (speedup " << t_serial / t_parallel << "x)\n";
    if (!(serial == parallel)) {
        std::cout << "MISMATCH between serial and parallel results\n";
        return 1;
    }
    std::cout << "results identical\n";
    return 0;
}
