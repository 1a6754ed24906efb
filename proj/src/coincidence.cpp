#include "odchar/coincidence.hpp"

#include <algorithm>
#include <stdexcept>

namespace odchar {

const char* to_string(CoincidenceRule r) {
    switch (r) {
        case CoincidenceRule::VertexSetsDiffer: return "vertex-sets-differ";
        case CoincidenceRule::PrimeGapEdge: return "prime-gap-edge";
        case CoincidenceRule::N4Or6: return "n4-or-6";
        case CoincidenceRule::OddCompositePair: return "odd-composite-pair";
        case CoincidenceRule::ExceptionalTable: return "exceptional-table";
        case CoincidenceRule::BruteForce: return "brute-force";
    }
    return "?";
}

namespace {

bool is_composite(const PrimeSieve& sieve, std::uint64_t x) {
    return x > 1 && !sieve.is_prime(x);
}

// Smallest prime in (lo, hi], if any.
std::optional<std::uint64_t> prime_in_range(const PrimeSieve& sieve, std::uint64_t lo,
                                            std::uint64_t hi) {
    for (std::uint64_t x = lo + 1; x <= hi; ++x)
        if (sieve.is_prime(x)) return x;
    return std::nullopt;
}

// Smallest (s, p) with m < s <= n, s = p + q, p < q both prime. An odd sum
// forces p = 2; an even sum forces both parts odd.
std::optional<std::pair<std::uint64_t, std::uint64_t>> edge_witness(const PrimeSieve& sieve,
                                                                    std::uint64_t m,
                                                                    std::uint64_t n) {
    for (std::uint64_t s = m + 1; s <= n; ++s) {
        if (s % 2 == 1) {
            if (s >= 5 && sieve.is_prime(s - 2))
                return std::make_pair<std::uint64_t, std::uint64_t>(2, s - 2);
            continue;
        }
        for (std::uint64_t p = 3; 2 * p < s; p += 2) {
            if (sieve.is_prime(p) && sieve.is_prime(s - p)) return std::make_pair(p, s - p);
        }
    }
    return std::nullopt;
}

}  // namespace

CoincidenceVerdict predict_symmetric_equal(const PrimeSieve& sieve, std::uint64_t m,
                                           std::uint64_t n) {
    if (m < 2 || m >= n) throw std::invalid_argument("predict_symmetric_equal requires 2 <= m < n");
    if (n > sieve.limit())
        throw std::out_of_range(
            "n = " + std::to_string(n) + " beyond the locally verified Goldbach frontier (" +
            std::to_string(sieve.limit()) + "); the verdict would be conditional");

    if (m == n - 1 && (n == 4 || n == 6))
        return {true, CoincidenceRule::N4Or6, std::nullopt, std::nullopt};

    if (auto p = prime_in_range(sieve, m, n))
        return {false, CoincidenceRule::VertexSetsDiffer, std::nullopt, p};

    if (auto pq = edge_witness(sieve, m, n))
        return {false, CoincidenceRule::PrimeGapEdge, pq, std::nullopt};

    const bool lemma_shape =
        m == n - 1 && n % 2 == 1 && is_composite(sieve, n) && is_composite(sieve, n - 2);
    return {true, lemma_shape ? CoincidenceRule::OddCompositePair : CoincidenceRule::BruteForce,
            std::nullopt, std::nullopt};
}

bool predict_alternating_equal(const PrimeSieve& sieve, std::uint64_t n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("predict_alternating_equal requires odd n >= 5");
    return is_composite(sieve, n) && is_composite(sieve, n - 4);
}

CoincidenceVerdict compare_alternating(const PrimeSieve& sieve, std::uint64_t m, std::uint64_t n) {
    if (m < 5 || m >= n) throw std::invalid_argument("compare_alternating requires 5 <= m < n");

    if (m == 5 && n == 6)
        return {true, CoincidenceRule::ExceptionalTable, std::nullopt, std::nullopt};

    if (m == n - 1 && n % 2 == 1) {
        if (sieve.is_prime(n))
            return {false, CoincidenceRule::VertexSetsDiffer, std::nullopt, n};
        if (sieve.is_prime(n - 4))
            return {false, CoincidenceRule::PrimeGapEdge,
                    std::pair<std::uint64_t, std::uint64_t>{2, n - 4}, std::nullopt};
        return {true, CoincidenceRule::OddCompositePair, std::nullopt, std::nullopt};
    }

    const PrimeGraph a = build_alternating_graph(sieve, m);
    const PrimeGraph b = build_alternating_graph(sieve, n);
    if (a.vertices() != b.vertices()) {
        std::vector<std::uint64_t> diff;
        std::set_symmetric_difference(a.vertices().begin(), a.vertices().end(),
                                      b.vertices().begin(), b.vertices().end(),
                                      std::back_inserter(diff));
        return {false, CoincidenceRule::VertexSetsDiffer, std::nullopt, diff.front()};
    }
    for (std::size_t i = 0; i < a.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < a.vertex_count(); ++j)
            if (a.adjacent(i, j) != b.adjacent(i, j))
                return {false, CoincidenceRule::PrimeGapEdge,
                        std::make_pair(a.vertices()[i], a.vertices()[j]), std::nullopt};
    return {true, CoincidenceRule::BruteForce, std::nullopt, std::nullopt};
}

std::optional<GoldbachWitness> goldbach_witness(const PrimeSieve& sieve, std::uint64_t n) {
    if (n % 2 != 0 || n < 8) return std::nullopt;
    for (std::uint64_t p = 3; 2 * p < n; p += 2) {
        if (sieve.is_prime(p) && sieve.is_prime(n - p)) return GoldbachWitness{n, p, n - p};
    }
    return std::nullopt;
}

GoldbachReport verify_goldbach(const PrimeSieve& sieve, std::uint64_t limit) {
    if (limit < 8) throw std::invalid_argument("verify_goldbach requires limit >= 8");
    if (limit > sieve.limit()) throw std::out_of_range("goldbach limit beyond sieve limit");
    const std::uint64_t top = limit - (limit % 2);

    std::uint64_t first_bad = UINT64_MAX;
    const std::int64_t lo = 4, hi = static_cast<std::int64_t>(top / 2);
#pragma omp parallel for schedule(dynamic, 4096) reduction(min : first_bad)
    for (std::int64_t half = lo; half <= hi; ++half) {
        const std::uint64_t n = 2 * static_cast<std::uint64_t>(half);
        if (!goldbach_witness(sieve, n))
            first_bad = std::min(first_bad, n);
    }

    GoldbachReport report;
    report.limit = top;
    report.checked = top / 2 - 3;
    if (first_bad != UINT64_MAX) report.counterexample = first_bad;
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
    std::vector<std::uint64_t> violations;
    const std::int64_t lo = 4, hi = static_cast<std::int64_t>(top / 2);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t half = lo; half <= hi; ++half) {
            const std::uint64_t n = 2 * static_cast<std::uint64_t>(half);
            const PrimeGraph prev = build_symmetric_graph(sieve, n - 1);
            const PrimeGraph cur = build_symmetric_graph(sieve, n);
            const bool strict_growth =
                prev.edges_subset_of(cur) && !graphs_equal(prev, cur);
            const bool decomposable = goldbach_witness(sieve, n).has_value();
            if (strict_growth != decomposable) local.push_back(n);
        }
#pragma omp critical
        violations.insert(violations.end(), local.begin(), local.end());
    }
    std::sort(violations.begin(), violations.end());
    result.violations = std::move(violations);
    result.holds = result.violations.empty();
    return result;
}

const std::vector<ExceptionalCoincidence>& exceptional_table() {
    static const std::vector<ExceptionalCoincidence> table = {
        {5, {"A_6"}},
        {6, {"A_5"}},
        {7, {"L_2(49)", "U_4(3)"}},
        {9, {"J_2", "S_6(2)", "O^+_8(2)"}},
    };
    return table;
}

std::vector<std::string> exceptional_partners(std::uint64_t n) {
    for (const auto& entry : exceptional_table())
        if (entry.alternating_degree == n) return entry.partners;
    return {};
}

}  // namespace odchar
