#include "odchar/json_io.hpp"

namespace odchar {

ordered_json bigint_to_json(const Bigint& v) {
    if (v.fits_ulong_p()) return v.get_ui();
    return v.get_str();
}

ordered_json to_json(const CoincidenceVerdict& v) {
    ordered_json j;
    j["equal"] = v.equal;
    j["rule"] = to_string(v.rule);
    if (v.witness_pair) j["witness_pair"] = {v.witness_pair->first, v.witness_pair->second};
    if (v.witness_prime) j["witness_prime"] = *v.witness_prime;
    return j;
}

ordered_json to_json(const GoldbachReport& r) {
    ordered_json j;
    j["frontier"] = r.limit;
    j["checked"] = r.checked;
    j["counterexample"] = r.counterexample ? ordered_json(*r.counterexample) : nullptr;
    auto ws = ordered_json::array();
    for (const auto& w : r.witnesses_sampled) ws.push_back({{"n", w.n}, {"p", w.p}, {"q", w.q}});
    j["witnesses_sampled"] = std::move(ws);
    return j;
}

ordered_json to_json(const GrowthCheck& c) {
    ordered_json j;
    j["limit"] = c.limit;
    j["holds"] = c.holds;
    j["violations"] = c.violations;
    return j;
}

ordered_json to_json(const CensusReport& r) {
    ordered_json j;
    j["target"] = r.target;
    j["total"] = r.total;
    auto bs = ordered_json::array();
    for (const auto& b : r.branches)
        bs.push_back({{"label", b.label}, {"count", b.count}, {"witness_family", b.witness_family}});
    j["branches"] = std::move(bs);
    return j;
}

ordered_json to_json(const BoundReport& r) {
    ordered_json j;
    j["target"] = r.target;
    j["lower_bound"] = r.lower_bound ? bigint_to_json(*r.lower_bound) : ordered_json(nullptr);
    j["basis"] = r.lower_bound ? to_string(r.basis) : "none";
    auto pcs = ordered_json::array();
    for (const auto& pc : r.preconditions)
        pcs.push_back({{"condition", pc.condition}, {"holds", pc.holds}});
    j["preconditions"] = std::move(pcs);
    if (!r.witness_families.empty()) {
        auto ws = ordered_json::array();
        for (const auto& w : r.witness_families)
            ws.push_back({{"family", w.name},
                          {"size", bigint_to_json(w.size)},
                          {"size_exact", w.size_exact}});
        j["witness_families"] = std::move(ws);
        j["witness_families_deduplicated"] = false;
    }
    return j;
}

ordered_json to_json(const Table1Row& row) {
    ordered_json j;
    j["m"] = row.m;
    j["m_factorization"] = row.m_factorization.to_string();
    j["m_minus_4"] = row.m - 4;
    j["m_minus_4_factorization"] = row.m_minus_4_factorization.to_string();
    j["l_m"] = row.largest_prime;
    j["delta"] = row.delta;
    j["delta_factorial_primes"] = row.delta_factorial_primes;
    j["nu"] = row.nu ? ordered_json(*row.nu) : nullptr;
    return j;
}

ordered_json to_json(const std::vector<Table1Row>& rows) {
    auto j = ordered_json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    return j;
}

ordered_json to_json(const FamilyCertificate& c) {
    ordered_json j;
    j["p"] = c.p;
    j["n"] = c.n;
    j["m"] = bigint_to_json(c.m);
    j["status"] = to_string(c.status);
    auto checks = ordered_json::array();
    for (const auto& ch : c.checks) {
        ordered_json cj;
        cj["label"] = ch.label;
        cj["value"] = bigint_to_json(ch.value);
        cj["verdict"] = to_string(ch.kind);
        switch (ch.kind) {
            case CheckKind::CompositeWithFactor: cj["factor"] = bigint_to_json(ch.witness); break;
            case CheckKind::CompositeBySquareDifference:
                cj["square_root_part"] = bigint_to_json(ch.witness);
                cj["factors"] = {bigint_to_json(ch.witness - 2), bigint_to_json(ch.witness + 2)};
                break;
            case CheckKind::CompositeByMrWitness:
                cj["mr_witness_base"] = bigint_to_json(ch.witness);
                break;
            default: break;
        }
        if (ch.factorization) cj["factorization"] = ch.factorization->to_string();
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

ordered_json to_json(const Mod144Report& r) {
    ordered_json j;
    j["n"] = r.n;
    j["all_hold"] = r.all_hold;
    auto cs = ordered_json::array();
    for (const auto& c : r.congruences)
        cs.push_back({{"modulus", c.modulus},
                      {"expected", c.expected_residue},
                      {"actual", c.actual_residue},
                      {"holds", c.holds}});
    j["congruences"] = std::move(cs);
    return j;
}

ordered_json to_json(const CompositeGeneratorReport& r) {
    ordered_json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["search_bound"] = r.search_bound;
    j["exhausted"] = r.exhausted;
    if (r.k) {
        j["k"] = *r.k;
        j["q"] = bigint_to_json(*r.q);
        j["q_verdict"] = to_string(r.q_verdict);
        auto gs = ordered_json::array();
        for (const auto& g : r.generated)
            gs.push_back({{"m", g.step},
                          {"exponent", bigint_to_json(g.exponent)},
                          {"divisible_by_q", g.divisibility_ok},
                          {"exceeds_q", g.exceeds_q}});
        j["generated"] = std::move(gs);
    }
    return j;
}

ordered_json to_json(const DeltaSurvey& s) {
    ordered_json j;
    j["p"] = s.p;
    j["certified"] = s.certified;
    j["refuted"] = s.refuted;
    j["inconclusive"] = s.inconclusive;
    auto es = ordered_json::array();
    for (const auto& e : s.entries) es.push_back({{"n", e.n}, {"status", to_string(e.status)}});
    j["entries"] = std::move(es);
    return j;
}

ordered_json to_json(const DegreePattern& d, const std::vector<std::uint64_t>& vertices) {
    ordered_json j;
    j["vertices"] = vertices;
    j["degrees"] = d.degrees;
    return j;
}

}  // namespace odchar
