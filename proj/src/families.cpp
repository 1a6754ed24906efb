#include "odchar/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace odchar {

const char* to_string(CheckKind k) {
    switch (k) {
        case CheckKind::CompositeWithFactor: return "composite-with-factor";
        case CheckKind::CompositeBySquareDifference: return "composite-by-difference-of-squares";
        case CheckKind::CompositeByMrWitness: return "composite-by-mr-witness";
        case CheckKind::Prime: return "prime";
        case CheckKind::ProbablyPrime: return "probably-prime";
    }
    return "?";
}

const char* to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Certified: return "certified";
        case CertificateStatus::Refuted: return "refuted";
        case CertificateStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::optional<Bigint> trial_division_factor(const Bigint& v, std::uint64_t bound) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), 2)) return Bigint(2);
    if (mpz_divisible_ui_p(v.get_mpz_t(), 3)) return Bigint(3);
    for (std::uint64_t d = 5; d <= bound; d += 6) {
        if (mpz_divisible_ui_p(v.get_mpz_t(), d)) return Bigint(static_cast<unsigned long>(d));
        if (mpz_divisible_ui_p(v.get_mpz_t(), d + 2))
            return Bigint(static_cast<unsigned long>(d + 2));
        if (Bigint(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d) > v) break;
    }
    return std::nullopt;
}

void attach_factorization(CompositenessCheck& check) {
    if (check.value.fits_ulong_p())
        check.factorization = Factorization::of(check.value.get_ui());
}

CompositenessCheck analyze_value(std::string label, Bigint value, std::uint64_t trial_bound) {
    CompositenessCheck check;
    check.label = std::move(label);
    check.value = std::move(value);
    if (auto f = trial_division_factor(check.value, trial_bound); f && *f != check.value) {
        check.kind = CheckKind::CompositeWithFactor;
        check.witness = *f;
        attach_factorization(check);
        return check;
    }
    switch (is_probable_prime(check.value)) {
        case Primality::Prime:
            check.kind = CheckKind::Prime;
            break;
        case Primality::ProbablyPrime:
            check.kind = CheckKind::ProbablyPrime;
            break;
        case Primality::Composite:
            check.kind = CheckKind::CompositeByMrWitness;
            check.witness = find_mr_witness_base(check.value).value_or(0);
            break;
    }
    return check;
}

bool trial_is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FamilyCertificate certify_delta_gt4(std::uint64_t p, std::uint32_t n,
                                    std::uint64_t trial_division_bound) {
    if (p < 3 || p % 2 == 0 || !trial_is_prime_u64(p))
        throw std::invalid_argument("certify_delta_gt4 requires an odd prime p");
    if (n < 2) throw std::invalid_argument("certify_delta_gt4 requires n >= 2");

    FamilyCertificate cert;
    cert.p = p;
    cert.n = n;
    mpz_ui_pow_ui(cert.m.get_mpz_t(), p, n);
    const std::string base_label = std::to_string(p) + "^" + std::to_string(n);

    cert.checks.push_back(analyze_value(base_label + "-2", cert.m - 2, trial_division_bound));

    // p^n - 4 = (p^{n/2} - 2)(p^{n/2} + 2) for even n; proper factors
    // whenever p^{n/2} > 3, i.e. except for 3^2 - 4 = 5.
    Bigint root;
    if (n % 2 == 0) mpz_ui_pow_ui(root.get_mpz_t(), p, n / 2);
    if (n % 2 == 0 && root > 3) {
        CompositenessCheck check;
        check.label = base_label + "-4";
        check.value = cert.m - 4;
        check.kind = CheckKind::CompositeBySquareDifference;
        check.witness = root;
        attach_factorization(check);
        cert.checks.push_back(std::move(check));
    } else {
        cert.checks.push_back(analyze_value(base_label + "-4", cert.m - 4, trial_division_bound));
    }

    bool any_prime = false, all_composite = true;
    for (const auto& c : cert.checks) {
        if (c.kind == CheckKind::Prime) any_prime = true;
        if (!c.certainly_composite()) all_composite = false;
    }
    cert.status = any_prime ? CertificateStatus::Refuted
                            : (all_composite ? CertificateStatus::Certified
                                             : CertificateStatus::Inconclusive);
    return cert;
}

Mod144Report check_mod144_family(std::uint64_t n) {
    if (n < 14 || n % 144 != 14)
        throw std::invalid_argument("check_mod144_family requires n == 14 (mod 144)");
    Mod144Report report;
    report.n = n;
    const std::pair<std::uint64_t, std::uint64_t> wanted[] = {{7, 2}, {17, 2}, {5, 4}, {19, 4}};
    report.all_hold = true;
    for (auto [q, r] : wanted) {
        const std::uint64_t actual = modpow_u64(3, n, q);
        report.congruences.push_back({q, r, actual, actual == r});
        report.all_hold = report.all_hold && actual == r;
    }
    return report;
}

CompositeGeneratorReport composite_generator(std::uint64_t a, std::uint64_t b,
                                             std::uint32_t count, std::uint32_t search_bound) {
    if (a < 2) throw std::invalid_argument("composite_generator requires a >= 2");
    if (b < 1) throw std::invalid_argument("composite_generator requires b >= 1");

    CompositeGeneratorReport report;
    report.a = a;
    report.b = b;
    report.search_bound = search_bound;

    Bigint power = 1;
    for (std::uint32_t k = 1; k <= search_bound; ++k) {
        power *= a;
        Bigint v = power - b;
        if (v <= static_cast<long>(0) || v <= a) continue;
        const Primality verdict = is_probable_prime(v);
        if (verdict == Primality::Composite) continue;
        report.k = k;
        report.q = v;
        report.q_verdict = verdict;
        break;
    }
    if (!report.k) {
        report.exhausted = true;
        return report;
    }

    const Bigint& q = *report.q;
    const Bigint residue = Bigint(static_cast<unsigned long>(b)) % q;
    const Bigint threshold = q + b;  // value composite once a^e - b > q
    for (std::uint32_t m = 1; m <= count; ++m) {
        GeneratedComposite g;
        g.step = m;
        g.exponent = Bigint(static_cast<unsigned long>(*report.k)) + (q - 1) * m;
        g.divisibility_ok =
            modpow(Bigint(static_cast<unsigned long>(a)), g.exponent, q) == residue;
        // a >= 2, so e > bits(q + b) forces a^e > q + b without computing a^e.
        const std::size_t threshold_bits = mpz_sizeinbase(threshold.get_mpz_t(), 2);
        if (g.exponent > static_cast<unsigned long>(threshold_bits)) {
            g.exceeds_q = true;
        } else {
            Bigint exact;
            mpz_ui_pow_ui(exact.get_mpz_t(), a, g.exponent.get_ui());
            g.exceeds_q = exact - b > q;
        }
        report.generated.push_back(std::move(g));
    }
    return report;
}

DeltaSurvey survey_prime_power_deltas(std::uint64_t p, std::uint32_t n_max,
                                      std::uint64_t trial_division_bound) {
    if (n_max < 2) throw std::invalid_argument("survey requires n_max >= 2");
    DeltaSurvey survey;
    survey.p = p;
    const std::int64_t steps = n_max / 2;
    std::vector<DeltaSurveyEntry> entries(static_cast<std::size_t>(steps));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 1; i <= steps; ++i) {
        const std::uint32_t n = static_cast<std::uint32_t>(2 * i);
        entries[static_cast<std::size_t>(i - 1)] = {
            n, certify_delta_gt4(p, n, trial_division_bound).status};
    }
    survey.entries = std::move(entries);
    for (const auto& e : survey.entries) {
        switch (e.status) {
            case CertificateStatus::Certified: ++survey.certified; break;
            case CertificateStatus::Refuted: ++survey.refuted; break;
            case CertificateStatus::Inconclusive: ++survey.inconclusive; break;
        }
    }
    return survey;
}

}  // namespace odchar
