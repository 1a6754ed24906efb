#ifndef ODCHAR_COINCIDENCE_HPP
#define ODCHAR_COINCIDENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odchar/arith.hpp"
#include "odchar/prime_graph.hpp"

namespace odchar {

enum class CoincidenceRule {
    VertexSetsDiffer,  // a prime lies in (m, n]
    PrimeGapEdge,      // a prime pair p+q lands in (m, n]
    N4Or6,             // the small equal cases n = 4, 6
    OddCompositePair,  // n odd with n and n-2 composite
    ExceptionalTable,  // known exceptional coincidence
    BruteForce,        // settled by direct graph comparison
};

const char* to_string(CoincidenceRule r);

struct CoincidenceVerdict {
    bool equal;
    CoincidenceRule rule;
    // For PrimeGapEdge: the (p, q) edge present in exactly one graph.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness_pair;
    // For VertexSetsDiffer: a prime in exactly one vertex set.
    std::optional<std::uint64_t> witness_prime;
};

// Whether Gamma(S_m) = Gamma(S_n), decided by the vertex/edge witness
// criteria (2 <= m < n). Throws std::out_of_range when n exceeds the
// sieve limit, i.e. the locally verified Goldbach frontier: beyond it an
// unequal verdict for m < n-1 would be conditional on the strong Goldbach
// conjecture.
CoincidenceVerdict predict_symmetric_equal(const PrimeSieve& sieve, std::uint64_t m,
                                           std::uint64_t n);

// Whether Gamma(A_n) = Gamma(A_{n-1}) for odd n >= 5: true iff n and n-4
// are both composite.
bool predict_alternating_equal(const PrimeSieve& sieve, std::uint64_t n);

// Verdict for Gamma(A_m) vs Gamma(A_n), 5 <= m < n, with witnesses.
CoincidenceVerdict compare_alternating(const PrimeSieve& sieve, std::uint64_t m, std::uint64_t n);

struct GoldbachWitness {
    std::uint64_t n, p, q;  // p < q odd primes, p + q = n
    bool operator==(const GoldbachWitness&) const = default;
};

struct GoldbachReport {
    std::uint64_t limit = 0;
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> counterexample;
    std::vector<GoldbachWitness> witnesses_sampled;
    bool operator==(const GoldbachReport&) const = default;
};

// Smallest-p decomposition of even n >= 8 into two distinct odd primes.
std::optional<GoldbachWitness> goldbach_witness(const PrimeSieve& sieve, std::uint64_t n);

// Sweeps every even n in [8, limit]; OpenMP-parallel over blocks, merged
// by minimum counterexample.
GoldbachReport verify_goldbach(const PrimeSieve& sieve, std::uint64_t limit);

struct GrowthCheck {
    std::uint64_t limit = 0;
    bool holds = false;
    // Even n where strict graph growth and Goldbach decomposability
    // disagreed (empty when holds).
    std::vector<std::uint64_t> violations;
    bool operator==(const GrowthCheck&) const = default;
};

// For every even n in (6, limit]: Gamma(S_{n-1}) grows strictly into
// Gamma(S_n) exactly when n splits into two distinct odd primes. Both
// directions checked against actually built graphs; OpenMP-parallel.
GrowthCheck check_growth_equivalence(const PrimeSieve& sieve, std::uint64_t limit);

/// A finite simple group (or several) sharing the prime graph of an
/// alternating group outside the generic odd-composite case.
struct ExceptionalCoincidence {
    std::uint64_t alternating_degree;
    std::vector<std::string> partners;
};

// The four exceptional rows: degrees 5, 6, 7, 9.
const std::vector<ExceptionalCoincidence>& exceptional_table();

// Simple groups sharing Gamma(A_n) for n in {5, 6, 7, 9}; empty otherwise.
std::vector<std::string> exceptional_partners(std::uint64_t n);

}  // namespace odchar

#endif
