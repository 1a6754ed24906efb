#ifndef ODCHAR_FAMILIES_HPP
#define ODCHAR_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odchar/arith.hpp"

namespace odchar {

enum class CheckKind {
    CompositeWithFactor,          // witness = an exhibited nontrivial factor
    CompositeBySquareDifference,  // value = (witness - 2)(witness + 2)
    CompositeByMrWitness,         // witness = a Miller-Rabin base proving compositeness
    Prime,
    ProbablyPrime,
};

const char* to_string(CheckKind k);

struct CompositenessCheck {
    std::string label;  // e.g. "5^4-2"
    Bigint value;
    CheckKind kind;
    Bigint witness;
    // Full prime factorization, attached when the value fits 64 bits.
    std::optional<Factorization> factorization;

    bool certainly_composite() const {
        return kind == CheckKind::CompositeWithFactor ||
               kind == CheckKind::CompositeBySquareDifference ||
               kind == CheckKind::CompositeByMrWitness;
    }
};

enum class CertificateStatus {
    Certified,     // delta(p^n) > 4 established
    Refuted,       // p^n - 2 or p^n - 4 is prime, so delta(p^n) <= 4
    Inconclusive,  // a value resisted factoring and tests probably-prime
};

const char* to_string(CertificateStatus s);

/// Evidence that delta(p^n) > 4, built from compositeness of p^n - 2 and
/// p^n - 4 alone (p^n odd makes p^n - 1 and p^n - 3 even), so no largest-
/// prime computation is ever needed.
struct FamilyCertificate {
    std::uint64_t p = 0;
    std::uint32_t n = 0;
    Bigint m;  // p^n
    std::vector<CompositenessCheck> checks;
    CertificateStatus status = CertificateStatus::Inconclusive;
};

FamilyCertificate certify_delta_gt4(std::uint64_t p, std::uint32_t n,
                                    std::uint64_t trial_division_bound = 100'000);

struct CongruenceCheck {
    std::uint64_t modulus;
    std::uint64_t expected_residue;
    std::uint64_t actual_residue;
    bool holds;
};

struct Mod144Report {
    std::uint64_t n = 0;
    std::vector<CongruenceCheck> congruences;  // 3^n mod {7, 17, 5, 19}
    bool all_hold = false;
};

// For n == 14 (mod 144): 3^n == 2 mod 7 and mod 17, 3^n == 4 mod 5 and
// mod 19, so 3^n - 2 and 3^n - 4 are composite and delta(3^n) >= 8.
Mod144Report check_mod144_family(std::uint64_t n);

struct GeneratedComposite {
    Bigint exponent;        // k + (q-1)m
    std::uint64_t step;     // m
    bool divisibility_ok;   // q | a^exponent - b, verified by modpow
    bool exceeds_q;         // a^exponent - b > q, so the value is composite
};

struct CompositeGeneratorReport {
    std::uint64_t a = 0, b = 0;
    std::uint64_t search_bound = 0;
    std::optional<std::uint64_t> k;  // first k with a^k - b prime and > a
    std::optional<Bigint> q;         // that prime
    Primality q_verdict = Primality::Composite;
    std::vector<GeneratedComposite> generated;
    // True when no qualifying prime appeared up to the bound; then every
    // a^k - b in range was itself composite (or <= a).
    bool exhausted = false;
};

// Generates arbitrarily many exponents e with a^e - b composite, from the
// first prime q = a^k - b > a: q divides a^{k+(q-1)m} - b for every m >= 1.
CompositeGeneratorReport composite_generator(std::uint64_t a, std::uint64_t b,
                                             std::uint32_t count, std::uint32_t search_bound);

struct DeltaSurveyEntry {
    std::uint32_t n;
    CertificateStatus status;
};

struct DeltaSurvey {
    std::uint64_t p = 0;
    std::vector<DeltaSurveyEntry> entries;  // even n <= n_max, increasing
    std::uint32_t certified = 0;
    std::uint32_t refuted = 0;
    std::uint32_t inconclusive = 0;
};

// certify_delta_gt4 across all even exponents up to n_max; OpenMP-parallel
// per exponent.
DeltaSurvey survey_prime_power_deltas(std::uint64_t p, std::uint32_t n_max,
                                      std::uint64_t trial_division_bound = 100'000);

}  // namespace odchar

#endif
