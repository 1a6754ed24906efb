#include "odchar/census.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace odchar {

const char* to_string(BoundBasis b) {
    switch (b) {
        case BoundBasis::ExactNu: return "exact-nu";
        case BoundBasis::AbelianOnly: return "abelian-only";
        case BoundBasis::PaperConservative: return "paper-conservative";
    }
    return "?";
}

CensusReport s27_census(const GroupCountTable& table) {
    const auto nu27 = table.nu(27);
    const auto nu54 = table.nu(54);
    if (!nu27) throw std::runtime_error("census needs nu(27); order 27 missing from table");
    if (!nu54) throw std::runtime_error("census needs nu(54); order 54 missing from table");

    CensusReport report;
    report.target = "S_27";
    report.branches = {
        {"S ≅ A_27 cases", 3, "S_27, Z_2×A_27, Z_2·A_27"},
        {"G/R ≅ A_26, R order 54", *nu54, "R×A_26"},
        {"G/R ≅ A_26, split factor", *nu27, "Q×(Z_2·A_26)"},
        {"G/R ≅ S_26 fibre products", *nu54, "subdirect with order-54 quotient"},
    };
    for (const auto& b : report.branches) report.total += b.count;
    return report;
}

namespace {

struct Preconditions {
    bool odd;
    bool delta_gt4;
    bool support_ok;
    std::uint64_t delta;
    Factorization m_fact;

    bool all() const { return odd && delta_gt4 && support_ok; }
};

Preconditions check_bound_preconditions(const PrimeSieve& sieve, std::uint64_t m) {
    Preconditions pc{};
    pc.odd = (m % 2 == 1);
    pc.delta = sieve.delta(m);
    pc.delta_gt4 = pc.delta > 4;
    pc.m_fact = Factorization::of(m);
    pc.support_ok = true;
    for (std::uint64_t p : pc.m_fact.prime_support())
        if (p > pc.delta) pc.support_ok = false;
    return pc;
}

std::vector<PreconditionCheck> precondition_list(const Preconditions& pc) {
    return {
        {"m odd", pc.odd},
        {"delta(m) > 4", pc.delta_gt4},
        {"every prime factor of m is <= delta(m) = " + std::to_string(pc.delta), pc.support_ok},
    };
}

}  // namespace

BoundReport alt_lower_bound(const PrimeSieve& sieve, std::uint64_t m,
                            const GroupCountTable& table) {
    BoundReport report;
    report.target = "A_" + std::to_string(m);
    const Preconditions pc = check_bound_preconditions(sieve, m);
    report.preconditions = precondition_list(pc);
    if (!pc.all()) return report;

    const NuLowerBound nu = nu_lower_bound(table, pc.m_fact);
    report.lower_bound = 1 + nu.count;
    report.basis = nu.exact ? BoundBasis::ExactNu : BoundBasis::AbelianOnly;
    return report;
}

BoundReport sym_lower_bound(const PrimeSieve& sieve, std::uint64_t m,
                            const GroupCountTable& table) {
    BoundReport report;
    report.target = "S_" + std::to_string(m);
    const Preconditions pc = check_bound_preconditions(sieve, m);
    report.preconditions = precondition_list(pc);
    if (!pc.all()) return report;

    report.lower_bound = 4;
    report.basis = BoundBasis::PaperConservative;

    const std::string M = std::to_string(m), P = std::to_string(m - 1);
    const NuLowerBound nu_m = nu_lower_bound(table, pc.m_fact);
    const NuLowerBound nu_2m = nu_lower_bound(table, Factorization::of(2 * m));
    report.witness_families = {
        {"S_" + M, 1, true},
        {"Z_2×A_" + M, 1, true},
        {"Z_2·A_" + M, 1, true},
        {"S_" + P + "×H, |H| = " + M, nu_m.count, nu_m.exact},
        {"(Z_2×A_" + P + ")×H, |H| = " + M, nu_m.count, nu_m.exact},
        {"(Z_2·A_" + P + ")×H, |H| = " + M, nu_m.count, nu_m.exact},
        {"A_" + P + "×K, |K| = " + std::to_string(2 * m), nu_2m.count, nu_2m.exact},
    };
    return report;
}

std::vector<Table1Row> table1_search(const PrimeSieve& sieve, std::uint64_t lo, std::uint64_t hi,
                                     const GroupCountTable& table) {
    if (hi > sieve.limit()) throw std::out_of_range("table1_search range beyond sieve limit");
    if (lo < 5) lo = 5;  // delta > 4 is impossible below m = 9 anyway

    std::vector<Table1Row> rows;
    const std::int64_t lo_i = static_cast<std::int64_t>(lo), hi_i = static_cast<std::int64_t>(hi);
#pragma omp parallel
    {
        std::vector<Table1Row> local;
#pragma omp for schedule(dynamic, 512) nowait
        for (std::int64_t mi = lo_i; mi <= hi_i; ++mi) {
            const std::uint64_t m = static_cast<std::uint64_t>(mi);
            if (m % 2 == 0) continue;
            const std::uint64_t l = sieve.largest_prime_leq(m);
            const std::uint64_t d = m - l;
            if (d <= 4) continue;
            Factorization f = Factorization::of(m);
            bool support_ok = true;
            for (std::uint64_t p : f.prime_support())
                if (p > d) support_ok = false;
            if (!support_ok) continue;

            Table1Row row;
            row.m = m;
            row.m_factorization = std::move(f);
            row.m_minus_4_factorization = Factorization::of(m - 4);
            row.largest_prime = l;
            row.delta = d;
            row.delta_factorial_primes = sieve.primes_upto(d);
            row.nu = table.nu(m);
            local.push_back(std::move(row));
        }
#pragma omp critical
        rows.insert(rows.end(), std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.m < b.m; });
    return rows;
}

std::string format_table1(const std::vector<Table1Row>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(18) << "m" << std::setw(18) << "m-4" << std::setw(8) << "l_m"
        << std::setw(10) << "delta" << std::setw(26) << "pi(delta!)" << "nu\n";
    for (const auto& r : rows) {
        std::ostringstream m_col, m4_col, pi_col;
        m_col << r.m << "=" << r.m_factorization.to_string();
        m4_col << (r.m - 4) << "=" << r.m_minus_4_factorization.to_string();
        for (std::size_t i = 0; i < r.delta_factorial_primes.size(); ++i) {
            if (i) pi_col << ", ";
            pi_col << r.delta_factorial_primes[i];
        }
        out << std::left << std::setw(18) << m_col.str() << std::setw(18) << m4_col.str()
            << std::setw(8) << r.largest_prime << std::setw(10) << r.delta << std::setw(26)
            << pi_col.str();
        if (r.nu)
            out << *r.nu;
        else
            out << "?";
        out << '\n';
    }
    return out.str();
}

}  // namespace odchar
