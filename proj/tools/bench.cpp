// Times the OpenMP sweep kernels against their serial reference twins and
// checks that both produce identical reports.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "odchar/reference.hpp"

using namespace odchar;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool match) {
    std::cout << std::left << std::setw(28) << name << std::right << std::fixed
              << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
              << parallel_ms << " ms" << std::setw(8) << std::setprecision(2)
              << serial_ms / parallel_ms << "x   " << (match ? "outputs match" : "OUTPUT MISMATCH")
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t goldbach_limit = 2'000'000;
    std::uint64_t growth_limit = 6'000;
    std::uint64_t table1_hi = 200'000;
    if (argc > 1) goldbach_limit = std::stoull(argv[1]);
    if (argc > 2) growth_limit = std::stoull(argv[2]);
    if (argc > 3) table1_hi = std::stoull(argv[3]);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run serially\n";
#endif

    const PrimeSieve sieve(std::max({goldbach_limit, growth_limit, table1_hi}));
    const auto table = GroupCountTable::parse("", "empty");

    std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(13) << "serial"
              << std::setw(13) << "parallel" << std::setw(9) << "speedup" << "\n";

    {
        GoldbachReport serial, parallel;
        const double ts = time_ms([&] { serial = reference::verify_goldbach(sieve, goldbach_limit); });
        const double tp = time_ms([&] { parallel = verify_goldbach(sieve, goldbach_limit); });
        report("goldbach " + std::to_string(goldbach_limit), ts, tp, serial == parallel);
    }
    {
        GrowthCheck serial, parallel;
        const double ts =
            time_ms([&] { serial = reference::check_growth_equivalence(sieve, growth_limit); });
        const double tp = time_ms([&] { parallel = check_growth_equivalence(sieve, growth_limit); });
        report("growth " + std::to_string(growth_limit), ts, tp, serial == parallel);
    }
    {
        std::vector<Table1Row> serial, parallel;
        const double ts =
            time_ms([&] { serial = reference::table1_search(sieve, 5, table1_hi, table); });
        const double tp = time_ms([&] { parallel = table1_search(sieve, 5, table1_hi, table); });
        report("table1 " + std::to_string(table1_hi), ts, tp, serial == parallel);
    }
    return 0;
}
