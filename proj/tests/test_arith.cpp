#include <doctest.h>

#include <cstdint>
#include <set>

#include "odchar/arith.hpp"

using namespace odchar;

namespace {

// Independent primality oracle.
bool oracle_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool oracle_prime_power(std::uint64_t m) {
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        return m == 1;
    }
    return m > 1;  // m prime
}

// Pentagonal-number recurrence, the cross-check for partition_count.
std::vector<Bigint> pentagonal_partition_table(std::uint32_t n_max) {
    std::vector<Bigint> p(n_max + 1);
    p[0] = 1;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        Bigint acc = 0;
        for (std::uint32_t k = 1;; ++k) {
            const std::uint64_t g1 = static_cast<std::uint64_t>(k) * (3 * k - 1) / 2;
            const std::uint64_t g2 = static_cast<std::uint64_t>(k) * (3 * k + 1) / 2;
            if (g1 > n) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[n - g1];
            if (g2 <= n) acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return p;
}

}  // namespace

TEST_CASE("sieve agrees with trial division") {
    const PrimeSieve sieve(20'000);
    for (std::uint64_t n = 0; n <= 20'000; ++n) CHECK(sieve.is_prime(n) == oracle_prime(n));
    CHECK_THROWS_AS((void)sieve.is_prime(20'001), std::out_of_range);
}

TEST_CASE("largest_prime_leq and delta") {
    const PrimeSieve sieve(10'000);
    CHECK(sieve.largest_prime_leq(125) == 113);
    CHECK(sieve.largest_prime_leq(7) == 7);
    CHECK(sieve.largest_prime_leq(875) == 863);
    CHECK(sieve.delta(125) == 12);
    CHECK(sieve.delta(27) == 4);
    CHECK(sieve.delta(9973) == 0);  // prime

    for (std::uint64_t m = 2; m <= 10'000; ++m) {
        const std::uint64_t l = sieve.largest_prime_leq(m);
        CHECK(oracle_prime(l));
        CHECK(l <= m);
        for (std::uint64_t x = l + 1; x <= m; ++x) CHECK(!oracle_prime(x));
        if (m % 2 == 1 && m > 2) CHECK(sieve.delta(m) % 2 == 0);
        CHECK((sieve.delta(m) == 0) == oracle_prime(m));
    }

    CHECK_THROWS_AS((void)sieve.largest_prime_leq(1), std::out_of_range);
    CHECK_THROWS_AS((void)sieve.largest_prime_leq(10'001), std::out_of_range);
}

TEST_CASE("landau_sum values and equality cases") {
    CHECK(landau_sum(1) == 1);
    CHECK(landau_sum(12) == 7);
    CHECK(landau_sum(35) == 12);
    CHECK_THROWS(landau_sum(0));
    std::uint64_t bad = 0;
    for (std::uint64_t m = 1; m <= 100'000; ++m) {
        const std::uint64_t s = landau_sum(m);
        if (s > m) ++bad;
        if (m > 1 && (s == m) != oracle_prime_power(m)) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("factorial factorization via Legendre") {
    const Factorization f27 = factorial_factorization(27);
    const std::vector<FactorPower> expected = {{2, 23}, {3, 13}, {5, 6}, {7, 3}, {11, 2},
                                               {13, 2},  {17, 1}, {19, 1}, {23, 1}};
    CHECK(f27.parts() == expected);

    CHECK(factorial_factorization(1).is_one());
    CHECK(factorial_factorization(0).is_one());

    // Direct multiplication oracle: 10! = 3628800.
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= 10; ++i) f *= i;
    CHECK(factorial_factorization(10) == Factorization::of(f));

    for (std::uint32_t n = 2; n <= 20; ++n) {
        std::uint64_t fact = 1;
        for (std::uint64_t i = 2; i <= n; ++i) fact *= i;
        CHECK(factorial_factorization(n).value() == Bigint(std::to_string(fact)));
    }
}

TEST_CASE("partition counts against the pentagonal recurrence") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(3) == 3);
    CHECK(partition_count(7) == 15);
    CHECK(partition_count(14) == 135);
    const auto oracle = pentagonal_partition_table(200);
    for (std::uint32_t n = 0; n <= 200; ++n) CHECK(partition_count(n) == oracle[n]);
}

TEST_CASE("probabilistic primality verdicts") {
    CHECK(4782967 % 7 == 0);  // division oracle for 3^14 - 2
    CHECK(is_probable_prime(4782967) == Primality::Composite);
    CHECK(is_probable_prime(2) == Primality::Prime);
    CHECK(oracle_prime(1000000007));
    CHECK(is_probable_prime(1000000007) == Primality::Prime);
    CHECK(is_probable_prime(0) == Primality::Composite);
    CHECK(is_probable_prime(1) == Primality::Composite);

    // Large inputs: only certainty below the deterministic threshold.
    Bigint big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 200);
    CHECK(is_probable_prime(big - 1) == Primality::Composite);  // even
    CHECK(big - 2 >= deterministic_mr_threshold());
    const Primality verdict = is_probable_prime(big - 2);
    CHECK(verdict != Primality::Prime);
}

TEST_CASE("miller-rabin never contradicts the sieve up to 10^6") {
    const PrimeSieve sieve(1'000'000);
    std::uint64_t first_mismatch = 0;
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        const Primality want = sieve.is_prime(n) ? Primality::Prime : Primality::Composite;
        if (is_probable_prime(n) != want) {
            first_mismatch = n;
            break;
        }
    }
    CHECK(first_mismatch == 0);
}

TEST_CASE("modpow") {
    CHECK(modpow(3, 14, 7) == 2);
    CHECK(modpow(3, 14, 19) == 4);
    CHECK(modpow(123456789, 0, 17) == 1);
    CHECK(modpow(5, 100, 1) == 0);
    CHECK(modpow_u64(3, 14, 7) == 2);
    CHECK_THROWS(modpow(2, 3, 0));
    CHECK_THROWS(modpow(2, -3, 5));
}

TEST_CASE("factorization type invariants") {
    CHECK_THROWS_AS(Factorization({{4, 1}}), std::invalid_argument);          // not prime
    CHECK_THROWS_AS(Factorization({{3, 1}, {2, 1}}), std::invalid_argument);  // not increasing
    CHECK_THROWS_AS(Factorization({{2, 0}}), std::invalid_argument);          // zero exponent
    CHECK_THROWS_AS(Factorization({{2, 1}, {2, 1}}), std::invalid_argument);  // repeated prime

    CHECK(Factorization::of(1).is_one());
    CHECK(Factorization::of(875).prime_support() == std::vector<std::uint64_t>{5, 7});
    CHECK(Factorization::of(539).prime_support() == std::vector<std::uint64_t>{7, 11});
    CHECK(Factorization::of(1).prime_support().empty());
    CHECK(Factorization::of(625).to_string() == "5^4");
    CHECK(Factorization::of(1).to_string() == "1");

    for (std::uint64_t m : {2ULL, 360ULL, 9973ULL, 65536ULL, 999983ULL, 4782969ULL})
        CHECK(Factorization::of(m).value() == Bigint(std::to_string(m)));
}
