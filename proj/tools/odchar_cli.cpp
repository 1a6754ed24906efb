#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "odchar/census.hpp"
#include "odchar/coincidence.hpp"
#include "odchar/families.hpp"
#include "odchar/group_counts.hpp"
#include "odchar/json_io.hpp"
#include "odchar/prime_graph.hpp"

#ifndef ODCHAR_DEFAULT_TABLE
#define ODCHAR_DEFAULT_TABLE "data/group_counts.txt"
#endif

namespace {

using namespace odchar;

std::string resolve_table_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("OD_TABLE_PATH"); env && *env) return env;
    return ODCHAR_DEFAULT_TABLE;
}

PrimeGraph build_graph(const PrimeSieve& sieve, const std::string& family, std::uint64_t n) {
    return family == "sym" ? build_symmetric_graph(sieve, n) : build_alternating_graph(sieve, n);
}

std::string degpat_text(const PrimeGraph& g) {
    const DegreePattern d = degree_pattern(g);
    std::string out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (i) out += ' ';
        out += std::to_string(g.vertices()[i]) + ":" + std::to_string(d.degrees[i]);
    }
    return out;
}

std::string verdict_text(const CoincidenceVerdict& v) {
    std::string out = v.equal ? "equal (" : "not equal (";
    out += to_string(v.rule);
    if (v.witness_prime) out += ": " + std::to_string(*v.witness_prime);
    if (v.witness_pair)
        out += ": " + std::to_string(v.witness_pair->first) + "+" +
               std::to_string(v.witness_pair->second);
    out += ")";
    return out;
}

void print_bound_text(const BoundReport& r) {
    std::cout << "target: " << r.target << "\n";
    for (const auto& pc : r.preconditions)
        std::cout << "  [" << (pc.holds ? "ok" : "FAILED") << "] " << pc.condition << "\n";
    if (r.lower_bound) {
        std::cout << "h_OD(" << r.target << ") >= " << r.lower_bound->get_str() << " ("
                  << to_string(r.basis) << ")\n";
        if (!r.witness_families.empty()) {
            std::cout << "witness families (not deduplicated):\n";
            for (const auto& w : r.witness_families)
                std::cout << "  " << w.name << ": " << w.size.get_str()
                          << (w.size_exact ? "" : " (abelian-only)") << "\n";
        }
    } else {
        std::cout << "no bound: a precondition failed\n";
    }
}

void print_census_text(const CensusReport& r) {
    std::cout << "target: " << r.target << "\n";
    for (const auto& b : r.branches)
        std::cout << "  " << b.label << ": " << b.count << "  [" << b.witness_family << "]\n";
    std::cout << "total: " << r.total << "\n";
}

void print_goldbach_text(const GoldbachReport& r) {
    if (r.counterexample) {
        std::cout << "counterexample: " << *r.counterexample << "\n";
        return;
    }
    std::cout << "verified: every even n in [8, " << r.limit
              << "] is a sum of two distinct odd primes (" << r.checked << " cases)\n";
    for (const auto& w : r.witnesses_sampled)
        std::cout << "  " << w.n << " = " << w.p << " + " << w.q << "\n";
}

void print_certificate_text(const FamilyCertificate& c) {
    std::cout << c.p << "^" << c.n << " = " << c.m.get_str() << ": " << to_string(c.status)
              << "\n";
    for (const auto& ch : c.checks) {
        std::cout << "  " << ch.label << " = " << ch.value.get_str() << ": "
                  << to_string(ch.kind);
        if (ch.kind == CheckKind::CompositeWithFactor)
            std::cout << " (factor " << ch.witness.get_str() << ")";
        if (ch.kind == CheckKind::CompositeBySquareDifference)
            std::cout << " (" << Bigint(ch.witness - 2).get_str() << " * "
                      << Bigint(ch.witness + 2).get_str() << ")";
        if (ch.kind == CheckKind::CompositeByMrWitness)
            std::cout << " (witness base " << ch.witness.get_str() << ")";
        if (ch.factorization) std::cout << " = " << ch.factorization->to_string();
        std::cout << "\n";
    }
}

void print_generator_text(const CompositeGeneratorReport& r) {
    if (r.exhausted) {
        std::cout << "no prime " << r.a << "^k - " << r.b << " > " << r.a << " for k <= "
                  << r.search_bound << "; every value in range is composite or <= " << r.a
                  << "\n";
        return;
    }
    std::cout << "q = " << r.a << "^" << *r.k << " - " << r.b << " = " << r.q->get_str() << " ("
              << to_string(r.q_verdict) << ")\n";
    for (const auto& g : r.generated)
        std::cout << "  " << r.a << "^" << g.exponent.get_str() << " - " << r.b << ": "
                  << (g.divisibility_ok ? "divisible by q" : "NOT divisible by q") << ", "
                  << (g.exceeds_q ? "exceeds q (composite)" : "does not exceed q") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime graphs, degree patterns, and OD-characterization bounds for alternating "
                 "and symmetric groups"};
    app.require_subcommand(1);

    std::uint64_t sieve_limit = PrimeSieve::kDefaultLimit;
    app.add_option("--sieve-limit", sieve_limit, "primality table limit")
        ->capture_default_str();

    std::string family, format = "text", table_path;
    std::uint64_t n = 0, m = 0, lo = 100, hi = 1000, limit = 0;
    std::uint64_t gen_a = 0, gen_b = 0;
    std::uint32_t gen_count = 3, gen_bound = 64, delta_n = 0;
    std::uint64_t delta_p = 0;

    auto* graph_cmd = app.add_subcommand("graph", "prime graph of S_n or A_n")->fallthrough();
    graph_cmd->add_option("family", family)->required()->check(CLI::IsMember({"sym", "alt"}));
    graph_cmd->add_option("n", n)->required();
    graph_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json", "text"}));

    auto* degpat_cmd = app.add_subcommand("degpat", "degree pattern of S_n or A_n")->fallthrough();
    degpat_cmd->add_option("family", family)->required()->check(CLI::IsMember({"sym", "alt"}));
    degpat_cmd->add_option("n", n)->required();
    degpat_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* compare_cmd = app.add_subcommand("compare", "prime-graph coincidence verdict")->fallthrough();
    compare_cmd->add_option("family", family)->required()->check(CLI::IsMember({"sym", "alt"}));
    compare_cmd->add_option("m", m)->required();
    compare_cmd->add_option("n", n)->required();
    compare_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* goldbach_cmd = app.add_subcommand("goldbach", "two-distinct-odd-prime decompositions")->fallthrough();
    goldbach_cmd->add_option("--limit", limit)->required();
    goldbach_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* growth_cmd =
        app.add_subcommand("growth", "strict graph growth vs decomposability, both directions")->fallthrough();
    growth_cmd->add_option("--limit", limit)->required();
    growth_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* census_cmd = app.add_subcommand("census", "order + degree-pattern census")->fallthrough();
    std::string census_target;
    census_cmd->add_option("target", census_target)->required()->check(CLI::IsMember({"s27"}));
    census_cmd->add_option("--table", table_path);
    census_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* bound_cmd = app.add_subcommand("bound", "h_OD lower bound for A_m or S_m")->fallthrough();
    bound_cmd->add_option("family", family)->required()->check(CLI::IsMember({"alt", "sym"}));
    bound_cmd->add_option("m", m)->required();
    bound_cmd->add_option("--table", table_path);
    bound_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* table1_cmd = app.add_subcommand("table1", "odd m with delta(m) > 4 and small support")->fallthrough();
    table1_cmd->add_option("--lo", lo)->required();
    table1_cmd->add_option("--hi", hi)->required();
    table1_cmd->add_option("--table", table_path);
    table1_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* family_cmd = app.add_subcommand("family", "infinite-family certificates")->fallthrough();
    family_cmd->require_subcommand(1);
    auto* mod144_cmd = family_cmd->add_subcommand("mod144", "3^n mod {7,17,5,19} congruences")->fallthrough();
    mod144_cmd->add_option("n", n)->required();
    mod144_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    auto* delta_cmd = family_cmd->add_subcommand("delta", "certify delta(p^n) > 4")->fallthrough();
    delta_cmd->add_option("p", delta_p)->required();
    delta_cmd->add_option("n", delta_n)->required();
    delta_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    auto* gen_cmd = family_cmd->add_subcommand("generator", "composites a^{k+(q-1)m} - b")->fallthrough();
    gen_cmd->add_option("a", gen_a)->required();
    gen_cmd->add_option("b", gen_b)->required();
    gen_cmd->add_option("--count", gen_count)->capture_default_str();
    gen_cmd->add_option("--search-bound", gen_bound)->capture_default_str();
    gen_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const bool json = format == "json";
    auto emit = [&](const ordered_json& j) { std::cout << j.dump(2) << "\n"; };

    try {
        if (graph_cmd->parsed() || degpat_cmd->parsed() || compare_cmd->parsed() ||
            goldbach_cmd->parsed() || growth_cmd->parsed() || bound_cmd->parsed() ||
            table1_cmd->parsed()) {
            const PrimeSieve sieve(sieve_limit);

            if (graph_cmd->parsed()) {
                const PrimeGraph g = build_graph(sieve, family, n);
                if (format == "dot")
                    std::cout << export_graph(g, GraphFormat::Dot);
                else if (json)
                    std::cout << export_graph(g, GraphFormat::Json) << "\n";
                else
                    std::cout << export_graph(g, GraphFormat::Text);
            } else if (degpat_cmd->parsed()) {
                const PrimeGraph g = build_graph(sieve, family, n);
                if (json)
                    emit(to_json(degree_pattern(g), g.vertices()));
                else
                    std::cout << degpat_text(g) << "\n";
            } else if (compare_cmd->parsed()) {
                const CoincidenceVerdict v = family == "sym"
                                                 ? predict_symmetric_equal(sieve, m, n)
                                                 : compare_alternating(sieve, m, n);
                if (json)
                    emit(to_json(v));
                else
                    std::cout << verdict_text(v) << "\n";
            } else if (goldbach_cmd->parsed()) {
                const GoldbachReport r = verify_goldbach(sieve, limit);
                if (json)
                    emit(to_json(r));
                else
                    print_goldbach_text(r);
                if (r.counterexample) return 1;
            } else if (growth_cmd->parsed()) {
                const GrowthCheck c = check_growth_equivalence(sieve, limit);
                if (json)
                    emit(to_json(c));
                else
                    std::cout << "growth equivalence on (6, " << c.limit
                              << "]: " << (c.holds ? "holds" : "violated") << "\n";
                if (!c.holds) return 1;
            } else if (bound_cmd->parsed()) {
                const auto table = GroupCountTable::load(resolve_table_path(table_path));
                const BoundReport r = family == "alt" ? alt_lower_bound(sieve, m, table)
                                                      : sym_lower_bound(sieve, m, table);
                if (json)
                    emit(to_json(r));
                else
                    print_bound_text(r);
                if (!r.lower_bound) return 1;
            } else {  // table1
                const auto table = GroupCountTable::load(resolve_table_path(table_path));
                const auto rows = table1_search(sieve, lo, hi, table);
                if (json)
                    emit(to_json(rows));
                else
                    std::cout << format_table1(rows);
            }
        } else if (census_cmd->parsed()) {
            const auto table = GroupCountTable::load(resolve_table_path(table_path));
            const CensusReport r = s27_census(table);
            if (json)
                emit(to_json(r));
            else
                print_census_text(r);
        } else if (mod144_cmd->parsed()) {
            const Mod144Report r = check_mod144_family(n);
            if (json) {
                emit(to_json(r));
            } else {
                std::cout << "n = " << r.n << ": "
                          << (r.all_hold ? "all congruences hold" : "congruence FAILED") << "\n";
                for (const auto& c : r.congruences)
                    std::cout << "  3^n mod " << c.modulus << " = " << c.actual_residue
                              << " (expected " << c.expected_residue << ")\n";
            }
            if (!r.all_hold) return 1;
        } else if (delta_cmd->parsed()) {
            const FamilyCertificate c = certify_delta_gt4(delta_p, delta_n);
            if (json)
                emit(to_json(c));
            else
                print_certificate_text(c);
        } else if (gen_cmd->parsed()) {
            const CompositeGeneratorReport r =
                composite_generator(gen_a, gen_b, gen_count, gen_bound);
            if (json)
                emit(to_json(r));
            else
                print_generator_text(r);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
