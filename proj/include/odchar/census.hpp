#ifndef ODCHAR_CENSUS_HPP
#define ODCHAR_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odchar/arith.hpp"
#include "odchar/group_counts.hpp"

namespace odchar {

struct CensusBranch {
    std::string label;
    std::uint64_t count;
    std::string witness_family;
};

struct CensusReport {
    std::string target;
    std::uint64_t total = 0;
    std::vector<CensusBranch> branches;
};

// The four-branch count of groups sharing |S_27| and D(S_27):
// 3 + nu(54) + nu(27) + nu(54). Requires nu(27) and nu(54) in the table.
CensusReport s27_census(const GroupCountTable& table);

enum class BoundBasis { ExactNu, AbelianOnly, PaperConservative };

const char* to_string(BoundBasis b);

struct PreconditionCheck {
    std::string condition;
    bool holds;
};

struct WitnessFamily {
    std::string name;
    Bigint size;
    bool size_exact;
};

struct BoundReport {
    std::string target;
    std::optional<Bigint> lower_bound;  // absent on precondition failure
    BoundBasis basis = BoundBasis::AbelianOnly;
    std::vector<PreconditionCheck> preconditions;
    // Overlapping witness families (not deduplicated); informational.
    std::vector<WitnessFamily> witness_families;
};

// h_OD(A_m) >= 1 + nu(m) for odd m with delta(m) > 4 and every prime
// factor of m at most delta(m). Falls back to 1 + nu_a(m) when the table
// lacks nu(m). No bound when a precondition fails; the report says which.
BoundReport alt_lower_bound(const PrimeSieve& sieve, std::uint64_t m,
                            const GroupCountTable& table);

// h_OD(S_m) >= 4 under the same preconditions; the report lists the seven
// witness families with their (not deduplicated) sizes.
BoundReport sym_lower_bound(const PrimeSieve& sieve, std::uint64_t m,
                            const GroupCountTable& table);

struct Table1Row {
    std::uint64_t m = 0;
    Factorization m_factorization;
    Factorization m_minus_4_factorization;
    std::uint64_t largest_prime = 0;  // l_m
    std::uint64_t delta = 0;          // m - l_m
    std::vector<std::uint64_t> delta_factorial_primes;  // primes <= delta
    std::optional<std::uint64_t> nu;

    bool operator==(const Table1Row&) const = default;
};

// Odd m in [lo, hi] with delta(m) > 4 and prime support inside the primes
// up to delta(m); sorted by m. OpenMP-parallel over blocks.
std::vector<Table1Row> table1_search(const PrimeSieve& sieve, std::uint64_t lo, std::uint64_t hi,
                                     const GroupCountTable& table);

// Aligned-column rendering of search rows.
std::string format_table1(const std::vector<Table1Row>& rows);

}  // namespace odchar

#endif
