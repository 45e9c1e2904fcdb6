#include "qcheb/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using qcheb::IdentityReport;

double seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Sweep>
std::pair<std::vector<IdentityReport>, double> timeSweep(Sweep sweep, int nMax, bool parallel) {
    const auto t0 = std::chrono::steady_clock::now();
    auto reports = sweep(nMax, parallel);
    return {std::move(reports), seconds(t0)};
}

}  // namespace

int main(int argc, char** argv) {
    const int nMax = argc > 1 ? std::atoi(argv[1]) : 18;
    if (nMax < 1) {
        std::cerr << "usage: sweep_bench [nMax]\n";
        return 2;
    }
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << '\n';
#else
    std::cout << "threads: 1 (built without OpenMP; parallel path degrades to serial)\n";
#endif
    std::cout << "nMax: " << nMax << "\n\n";
    std::cout << std::left << std::setw(12) << "suite" << std::right << std::setw(12) << "serial s"
              << std::setw(12) << "parallel s" << std::setw(10) << "speedup" << '\n';

    struct Entry {
        const char* name;
        std::vector<IdentityReport> (*sweep)(int, bool);
    };
    const Entry entries[] = {
        {"qbinom", qcheb::runQbinomSuite},
        {"cheb", qcheb::runChebSuite},
        {"incomplete", qcheb::runIncompleteSuite},
    };
    bool ok = true;
    for (const Entry& e : entries) {
        auto [serialReports, serialTime] = timeSweep(e.sweep, nMax, false);
        auto [parallelReports, parallelTime] = timeSweep(e.sweep, nMax, true);
        if (serialReports != parallelReports) {
            std::cerr << "MISMATCH: " << e.name
                      << " parallel sweep disagrees with the serial reference\n";
            ok = false;
            continue;
        }
        std::cout << std::left << std::setw(12) << e.name << std::right << std::fixed
                  << std::setprecision(3) << std::setw(12) << serialTime << std::setw(12)
                  << parallelTime << std::setprecision(2) << std::setw(10)
                  << (parallelTime > 0 ? serialTime / parallelTime : 0.0) << '\n';
    }
    return ok ? 0 : 1;
}
