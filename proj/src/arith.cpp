#include "odchar/arith.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace odchar {

namespace {

bool trial_division_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace

Factorization::Factorization(std::vector<FactorPower> parts) : parts_(std::move(parts)) {
    std::uint64_t prev = 1;
    for (const auto& fp : parts_) {
        if (fp.prime <= prev)
            throw std::invalid_argument("factorization primes must be strictly increasing");
        if (fp.exponent == 0)
            throw std::invalid_argument("factorization exponents must be >= 1");
        if (!trial_division_is_prime(fp.prime))
            throw std::invalid_argument("factorization entry " + std::to_string(fp.prime) +
                                        " is not prime");
        prev = fp.prime;
    }
}

Factorization Factorization::of(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("cannot factor 0");
    std::vector<FactorPower> parts;
    auto strip = [&](std::uint64_t p) {
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) parts.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) parts.push_back({m, 1});
    Factorization f;
    f.parts_ = std::move(parts);
    return f;
}

Bigint Factorization::value() const {
    Bigint v = 1;
    for (const auto& fp : parts_) {
        Bigint pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), fp.prime, fp.exponent);
        v *= pw;
    }
    return v;
}

std::vector<std::uint64_t> Factorization::prime_support() const {
    std::vector<std::uint64_t> s;
    s.reserve(parts_.size());
    for (const auto& fp : parts_) s.push_back(fp.prime);
    return s;
}

std::string Factorization::to_string() const {
    if (parts_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& fp : parts_) {
        if (!first) out << " * ";
        first = false;
        out << fp.prime;
        if (fp.exponent > 1) out << '^' << fp.exponent;
    }
    return out.str();
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), words_((limit >> 6) + 1, ~0ULL) {
    if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
    auto clear = [&](std::uint64_t n) { words_[n >> 6] &= ~(1ULL << (n & 63)); };
    clear(0);
    clear(1);
    for (std::uint64_t p = 2; p * p <= limit_; ++p) {
        if (!bit(p)) continue;
        for (std::uint64_t q = p * p; q <= limit_; q += p) clear(q);
    }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range("primality query " + std::to_string(n) +
                                " beyond sieve limit " + std::to_string(limit_));
    return bit(n);
}

std::uint64_t PrimeSieve::largest_prime_leq(std::uint64_t m) const {
    if (m < 2) throw std::out_of_range("largest_prime_leq requires m >= 2");
    if (m > limit_)
        throw std::out_of_range("largest_prime_leq(" + std::to_string(m) +
                                ") beyond sieve limit " + std::to_string(limit_));
    for (std::uint64_t p = m;; --p) {
        if (bit(p)) return p;
    }
}

std::uint64_t PrimeSieve::delta(std::uint64_t m) const { return m - largest_prime_leq(m); }

std::vector<std::uint64_t> PrimeSieve::primes_upto(std::uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range("primes_upto(" + std::to_string(n) + ") beyond sieve limit " +
                                std::to_string(limit_));
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (bit(p)) ps.push_back(p);
    return ps;
}

std::uint64_t PrimeSieve::count_primes_upto(std::uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range("count_primes_upto beyond sieve limit");
    std::uint64_t c = 0;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (bit(p)) ++c;
    return c;
}

std::uint64_t landau_sum(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("landau_sum requires m >= 1");
    if (m == 1) return 1;
    std::uint64_t sum = 0;
    const Factorization f = Factorization::of(m);
    for (const auto& fp : f.parts()) {
        std::uint64_t pw = 1;
        for (std::uint32_t i = 0; i < fp.exponent; ++i) pw *= fp.prime;
        sum += pw;
    }
    return sum;
}

Factorization factorial_factorization(std::uint32_t n) {
    std::vector<FactorPower> parts;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!trial_division_is_prime(p)) continue;
        std::uint64_t e = 0;
        for (std::uint64_t q = p; q <= n; q *= p) {
            e += n / q;
            if (q > n / p) break;  // avoid overflow of q *= p
        }
        parts.push_back({p, static_cast<std::uint32_t>(e)});
    }
    Factorization f(std::move(parts));
    return f;
}

Bigint partition_count(std::uint32_t n) {
    // Accumulate partitions-into-parts-<=k; exact arbitrary precision.
    std::vector<Bigint> dp(n + 1);
    dp[0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k)
        for (std::uint32_t i = k; i <= n; ++i) dp[i] += dp[i - k];
    return dp[n];
}

const char* to_string(Primality p) {
    switch (p) {
        case Primality::Prime: return "prime";
        case Primality::Composite: return "composite";
        case Primality::ProbablyPrime: return "probably_prime";
    }
    return "?";
}

const Bigint& deterministic_mr_threshold() {
    static const Bigint t("3317044064679887385961981");
    return t;
}

namespace {

// true if `a` witnesses the compositeness of odd n = d * 2^s + 1.
bool mr_witness(const Bigint& a, const Bigint& n, const Bigint& d, unsigned long s) {
    Bigint x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

constexpr std::array<unsigned, 13> kDeterministicBases = {2,  3,  5,  7,  11, 13, 17,
                                                          19, 23, 29, 31, 37, 41};

// Pseudo-random extra bases, seeded from n so verdicts are reproducible.
class RandomBases {
public:
    explicit RandomBases(const Bigint& n) : span_(n - 3) {
        gmp_randinit_mt(st_);
        gmp_randseed_ui(st_, 0x0dc4a5UL ^ mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffffUL));
    }
    ~RandomBases() { gmp_randclear(st_); }
    RandomBases(const RandomBases&) = delete;
    RandomBases& operator=(const RandomBases&) = delete;

    Bigint next() {
        Bigint a;
        mpz_urandomm(a.get_mpz_t(), st_, span_.get_mpz_t());
        return a + 2;  // in [2, n-2]
    }

private:
    gmp_randstate_t st_;
    Bigint span_;
};

}  // namespace

Primality is_probable_prime(const Bigint& n, unsigned rounds) {
    if (n < 2) return Primality::Composite;
    for (unsigned p : kDeterministicBases) {
        if (n == p) return Primality::Prime;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
    }
    Bigint d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    const bool deterministic = n < deterministic_mr_threshold();
    for (unsigned b : kDeterministicBases) {
        if (mr_witness(b, n, d, s)) return Primality::Composite;
    }
    if (deterministic) return Primality::Prime;

    RandomBases bases(n);
    for (unsigned r = 0; r < rounds; ++r) {
        if (mr_witness(bases.next(), n, d, s)) return Primality::Composite;
    }
    return Primality::ProbablyPrime;
}

std::optional<Bigint> find_mr_witness_base(const Bigint& n, unsigned rounds) {
    if (n < 5 || mpz_even_p(n.get_mpz_t())) return std::nullopt;
    Bigint d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned b : kDeterministicBases) {
        if (n == b) return std::nullopt;
        if (mr_witness(b, n, d, s)) return Bigint(b);
    }
    RandomBases bases(n);
    for (unsigned r = 0; r < rounds; ++r) {
        Bigint a = bases.next();
        if (mr_witness(a, n, d, s)) return a;
    }
    return std::nullopt;
}

Bigint modpow(const Bigint& base, const Bigint& exponent, const Bigint& modulus) {
    if (modulus < 1) throw std::invalid_argument("modpow requires modulus >= 1");
    if (exponent < 0) throw std::invalid_argument("modpow requires exponent >= 0");
    Bigint r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

std::uint64_t modpow_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    return modpow(Bigint(static_cast<unsigned long>(base)), Bigint(static_cast<unsigned long>(exponent)),
                  Bigint(static_cast<unsigned long>(modulus)))
        .get_ui();
}

}  // namespace odchar
