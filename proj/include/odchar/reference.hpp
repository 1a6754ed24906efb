#ifndef ODCHAR_REFERENCE_HPP
#define ODCHAR_REFERENCE_HPP

#include "odchar/census.hpp"
#include "odchar/coincidence.hpp"

// Plain single-threaded implementations of the parallel sweep kernels.
// They produce bit-identical reports and exist so the OpenMP versions can
// be tested against them (and benchmarked; see tools/bench.cpp).
namespace odchar::reference {

GoldbachReport verify_goldbach(const PrimeSieve& sieve, std::uint64_t limit);

GrowthCheck check_growth_equivalence(const PrimeSieve& sieve, std::uint64_t limit);

std::vector<Table1Row> table1_search(const PrimeSieve& sieve, std::uint64_t lo, std::uint64_t hi,
                                     const GroupCountTable& table);

}  // namespace odchar::reference

#endif
