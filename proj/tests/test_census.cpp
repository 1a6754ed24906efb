#include <doctest.h>

#include "odchar/census.hpp"
#include "odchar/coincidence.hpp"
#include "odchar/reference.hpp"

using namespace odchar;

namespace {

const PrimeSieve& sieve() {
    static const PrimeSieve s(10'000);
    return s;
}

const GroupCountTable& shipped() {
    static const GroupCountTable t = GroupCountTable::load(ODCHAR_TABLE_PATH);
    return t;
}

}  // namespace

TEST_CASE("s27 census totals 38") {
    const CensusReport r = s27_census(shipped());
    CHECK(r.target == "S_27");
    CHECK(r.total == 38);
    REQUIRE(r.branches.size() == 4);
    CHECK(r.branches[0].count == 3);
    CHECK(r.branches[1].count == 15);
    CHECK(r.branches[2].count == 5);
    CHECK(r.branches[3].count == 15);
}

TEST_CASE("census total is 3 + 2 nu(54) + nu(27) for any table") {
    const auto t = GroupCountTable::parse("27 7\n54 9\n", "inline");
    const CensusReport r = s27_census(t);
    CHECK(r.total == 3 + 2 * 9 + 7);
}

TEST_CASE("census names the missing order") {
    const auto no54 = GroupCountTable::parse("27 5\n", "inline");
    try {
        s27_census(no54);
        FAIL("expected a dependency error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("54") != std::string::npos);
    }
    const auto no27 = GroupCountTable::parse("54 15\n", "inline");
    try {
        s27_census(no27);
        FAIL("expected a dependency error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("27") != std::string::npos);
    }
}

TEST_CASE("alternating lower bounds match the known values") {
    const std::pair<std::uint64_t, std::uint64_t> expected[] = {
        {125, 6}, {147, 7}, {189, 14}, {539, 3}, {625, 16}, {875, 6}};
    for (const auto& [m, bound] : expected) {
        const BoundReport r = alt_lower_bound(sieve(), m, shipped());
        REQUIRE(r.lower_bound.has_value());
        CHECK(*r.lower_bound == bound);
        CHECK(r.basis == BoundBasis::ExactNu);
        for (const auto& pc : r.preconditions) CHECK(pc.holds);
    }
}

TEST_CASE("bound preconditions fail loudly") {
    // delta(123) = 10 but 41 divides 123.
    const BoundReport r123 = alt_lower_bound(sieve(), 123, shipped());
    CHECK(!r123.lower_bound.has_value());
    REQUIRE(r123.preconditions.size() == 3);
    CHECK(r123.preconditions[0].holds);
    CHECK(r123.preconditions[1].holds);
    CHECK(!r123.preconditions[2].holds);

    // 11 is prime: delta = 0.
    const BoundReport r11 = sym_lower_bound(sieve(), 11, shipped());
    CHECK(!r11.lower_bound.has_value());
    CHECK(!r11.preconditions[1].holds);

    // Even m.
    const BoundReport r126 = alt_lower_bound(sieve(), 126, shipped());
    CHECK(!r126.lower_bound.has_value());
    CHECK(!r126.preconditions[0].holds);
}

TEST_CASE("symmetric bound is the conservative 4 with seven families") {
    for (std::uint64_t m : {125ULL, 147ULL, 189ULL, 539ULL, 625ULL, 875ULL}) {
        const BoundReport r = sym_lower_bound(sieve(), m, shipped());
        REQUIRE(r.lower_bound.has_value());
        CHECK(*r.lower_bound == 4);
        CHECK(r.basis == BoundBasis::PaperConservative);
        REQUIRE(r.witness_families.size() == 7);
        CHECK(r.witness_families[0].size == 1);
        CHECK(r.witness_families[3].size == *shipped().nu(m));
    }
    const BoundReport r625 = sym_lower_bound(sieve(), 625, shipped());
    CHECK(r625.witness_families[6].size == 5);  // |K| = 1250 = 2 * 5^4: abelian floor
    CHECK(!r625.witness_families[6].size_exact);
}

TEST_CASE("bound reports stay above the guaranteed floor") {
    for (std::uint64_t m = 101; m <= 2001; m += 2) {
        const BoundReport r = alt_lower_bound(sieve(), m, shipped());
        if (r.lower_bound) CHECK(*r.lower_bound >= 2);
    }
}

TEST_CASE("table1 search reproduces the six rows") {
    const auto rows = table1_search(sieve(), 100, 1000, shipped());
    REQUIRE(rows.size() == 6);

    const std::uint64_t expect_m[] = {125, 147, 189, 539, 625, 875};
    const std::uint64_t expect_l[] = {113, 139, 181, 523, 619, 863};
    const std::uint64_t expect_d[] = {12, 8, 8, 16, 6, 12};
    const std::uint64_t expect_nu[] = {5, 6, 13, 2, 15, 5};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rows[i].m == expect_m[i]);
        CHECK(rows[i].largest_prime == expect_l[i]);
        CHECK(rows[i].delta == expect_d[i]);
        CHECK(rows[i].nu == expect_nu[i]);
    }

    CHECK(rows[3].delta_factorial_primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
    CHECK(rows[0].m_minus_4_factorization == Factorization({{11, 2}}));
    CHECK(rows[5].m_minus_4_factorization == Factorization({{13, 1}, {67, 1}}));
    CHECK(rows[4].m_factorization == Factorization({{5, 4}}));
}

TEST_CASE("table1 rows honor their invariants") {
    const auto rows = table1_search(sieve(), 3, 5000, shipped());
    std::uint64_t prev_m = 0;
    for (const auto& r : rows) {
        CHECK(r.m > prev_m);
        prev_m = r.m;
        CHECK(r.m % 2 == 1);
        CHECK(r.delta > 4);
        CHECK(r.delta == r.m - r.largest_prime);
        for (std::uint64_t p : r.m_factorization.prime_support()) CHECK(p <= r.delta);
        CHECK(predict_alternating_equal(sieve(), r.m));
    }
}

TEST_CASE("table1 search below 30 is empty") {
    CHECK(table1_search(sieve(), 3, 30, shipped()).empty());
}

TEST_CASE("table1 parallel kernel matches the reference") {
    CHECK(table1_search(sieve(), 5, 5000, shipped()) ==
          reference::table1_search(sieve(), 5, 5000, shipped()));
}

TEST_CASE("table1 text rendering") {
    const auto rows = table1_search(sieve(), 100, 1000, shipped());
    const std::string text = format_table1(rows);
    CHECK(text.find("125=5^3") != std::string::npos);
    CHECK(text.find("863") != std::string::npos);
    CHECK(text.find("2, 3, 5, 7, 11, 13") != std::string::npos);
}
