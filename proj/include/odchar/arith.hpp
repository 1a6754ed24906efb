#ifndef ODCHAR_ARITH_HPP
#define ODCHAR_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace odchar {

using Bigint = mpz_class;

/// Prime factorization of a positive integer as (prime, exponent) pairs
/// with strictly increasing primes. An empty list represents 1.
struct FactorPower {
    std::uint64_t prime;
    std::uint32_t exponent;
    bool operator==(const FactorPower&) const = default;
};

class Factorization {
public:
    Factorization() = default;
    // Validates: primes strictly increasing, each prime actually prime,
    // exponents >= 1. Throws std::invalid_argument otherwise.
    explicit Factorization(std::vector<FactorPower> parts);

    // Trial-division factorization of m >= 1.
    static Factorization of(std::uint64_t m);

    const std::vector<FactorPower>& parts() const { return parts_; }
    bool is_one() const { return parts_.empty(); }

    Bigint value() const;
    std::vector<std::uint64_t> prime_support() const;

    // "2^23 * 3^13 * 5" style; "1" for the empty factorization.
    std::string to_string() const;

    bool operator==(const Factorization&) const = default;

private:
    std::vector<FactorPower> parts_;
};

/// Bitset primality table over [0, limit]. Immutable after construction,
/// safe to share across threads. Queries beyond the limit throw rather
/// than silently extending the sieve.
class PrimeSieve {
public:
    static constexpr std::uint64_t kDefaultLimit = 1'000'000;

    explicit PrimeSieve(std::uint64_t limit = kDefaultLimit);

    std::uint64_t limit() const { return limit_; }

    // Throws std::out_of_range for n > limit.
    bool is_prime(std::uint64_t n) const;

    // Largest prime p <= m. Requires 2 <= m <= limit.
    std::uint64_t largest_prime_leq(std::uint64_t m) const;

    // m - largest_prime_leq(m). Zero iff m is prime.
    std::uint64_t delta(std::uint64_t m) const;

    // All primes p <= n in increasing order. Requires n <= limit.
    std::vector<std::uint64_t> primes_upto(std::uint64_t n) const;

    std::uint64_t count_primes_upto(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> words_;

    bool bit(std::uint64_t n) const {
        return (words_[n >> 6] >> (n & 63)) & 1u;
    }
};

// S(1) = 1; for m > 1 with factorization prod p_i^a_i, the sum of the
// maximal prime-power parts p_i^a_i. Controls element-order membership
// in symmetric and alternating groups.
std::uint64_t landau_sum(std::uint64_t m);

// Factorization of n! via Legendre's formula: the exponent of p is
// sum_{i>=1} floor(n/p^i).
Factorization factorial_factorization(std::uint32_t n);

// Number of integer partitions of n, exact. partition_count(0) == 1.
Bigint partition_count(std::uint32_t n);

enum class Primality { Prime, Composite, ProbablyPrime };

const char* to_string(Primality p);

// Miller-Rabin. Below kDeterministicThreshold the fixed witness set
// {2,...,41} gives a proven verdict (Prime/Composite only); above it
// `rounds` extra pseudo-random bases are tried and a passing n is
// reported ProbablyPrime with error probability <= 4^-rounds.
// Composite verdicts are always certain. Deterministic for fixed input.
Primality is_probable_prime(const Bigint& n, unsigned rounds = 25);

// "3317044064679887385961981": below this the fixed witness set is proven
// complete.
const Bigint& deterministic_mr_threshold();

// A Miller-Rabin base proving n composite: the deterministic bases first,
// then the same pseudo-random sequence is_probable_prime draws from.
// Empty when none of them witnesses within `rounds` tries.
std::optional<Bigint> find_mr_witness_base(const Bigint& n, unsigned rounds = 25);

// base^exponent mod modulus; modulus >= 1, exponent >= 0.
Bigint modpow(const Bigint& base, const Bigint& exponent, const Bigint& modulus);

std::uint64_t modpow_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

}  // namespace odchar

#endif
