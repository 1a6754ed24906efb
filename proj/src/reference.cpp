#include "odchar/reference.hpp"

#include <stdexcept>

namespace odchar::reference {

GoldbachReport verify_goldbach(const PrimeSieve& sieve, std::uint64_t limit) {
    if (limit < 8) throw std::invalid_argument("verify_goldbach requires limit >= 8");
    if (limit > sieve.limit()) throw std::out_of_range("goldbach limit beyond sieve limit");
    const std::uint64_t top = limit - (limit % 2);

    GoldbachReport report;
    report.limit = top;
    for (std::uint64_t n = 8; n <= top; n += 2) {
        ++report.checked;
        if (!goldbach_witness(sieve, n) && !report.counterexample) report.counterexample = n;
    }
    for (std::uint64_t n = 8; n <= top; n = (n == 8 ? 10 : n * 10)) {
        if (auto w = goldbach_witness(sieve, n)) report.witnesses_sampled.push_back(*w);
    }
    if (top > 8 && report.witnesses_sampled.back().n != top) {
        if (auto w = goldbach_witness(sieve, top)) report.witnesses_sampled.push_back(*w);
    }
    return report;
}

GrowthCheck check_growth_equivalence(const PrimeSieve& sieve, std::uint64_t limit) {
    if (limit < 8) throw std::invalid_argument("check_growth_equivalence requires limit >= 8");
    if (limit > sieve.limit()) throw std::out_of_range("growth limit beyond sieve limit");
    const std::uint64_t top = limit - (limit % 2);

    GrowthCheck result;
    result.limit = top;
    for (std::uint64_t n = 8; n <= top; n += 2) {
        const PrimeGraph prev = build_symmetric_graph(sieve, n - 1);
        const PrimeGraph cur = build_symmetric_graph(sieve, n);
        const bool strict_growth = prev.edges_subset_of(cur) && !graphs_equal(prev, cur);
        if (strict_growth != goldbach_witness(sieve, n).has_value()) result.violations.push_back(n);
    }
    result.holds = result.violations.empty();
    return result;
}

std::vector<Table1Row> table1_search(const PrimeSieve& sieve, std::uint64_t lo, std::uint64_t hi,
                                     const GroupCountTable& table) {
    if (hi > sieve.limit()) throw std::out_of_range("table1_search range beyond sieve limit");
    if (lo < 5) lo = 5;

    std::vector<Table1Row> rows;
    for (std::uint64_t m = lo; m <= hi; ++m) {
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
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace odchar::reference
