#include "odchar/prime_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace odchar {

std::string DegreePattern::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) out << ", ";
        out << degrees[i];
    }
    out << ')';
    return out.str();
}

namespace {

bool small_prime_check(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeGraph::PrimeGraph(std::vector<std::uint64_t> vertices, std::string source)
    : vertices_(std::move(vertices)), source_(std::move(source)) {
    if (vertices_.empty()) throw std::invalid_argument("prime graph needs at least one vertex");
    std::uint64_t prev = 1;
    for (std::uint64_t p : vertices_) {
        if (p <= prev) throw std::invalid_argument("vertices must be strictly increasing");
        if (!small_prime_check(p))
            throw std::invalid_argument("vertex " + std::to_string(p) + " is not prime");
        prev = p;
    }
    words_per_row_ = (vertices_.size() + 63) / 64;
    bits_.assign(words_per_row_ * vertices_.size(), 0);
}

bool PrimeGraph::adjacent(std::size_t i, std::size_t j) const {
    return (bits_[i * words_per_row_ + (j >> 6)] >> (j & 63)) & 1u;
}

void PrimeGraph::add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("no self-loops");
    bits_[i * words_per_row_ + (j >> 6)] |= 1ULL << (j & 63);
    bits_[j * words_per_row_ + (i >> 6)] |= 1ULL << (i & 63);
}

void PrimeGraph::fill_row_range(std::size_t i, std::size_t j_begin, std::size_t j_end) {
    std::uint64_t* row = bits_.data() + i * words_per_row_;
    std::size_t j = j_begin;
    for (; j < j_end && (j & 63) != 0; ++j) row[j >> 6] |= 1ULL << (j & 63);
    for (; j + 64 <= j_end; j += 64) row[j >> 6] = ~0ULL;
    for (; j < j_end; ++j) row[j >> 6] |= 1ULL << (j & 63);
}

std::uint32_t PrimeGraph::degree(std::size_t i) const {
    std::uint32_t d = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w)
        d += static_cast<std::uint32_t>(std::popcount(bits_[i * words_per_row_ + w]));
    return d;
}

std::size_t PrimeGraph::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) twice += degree(i);
    return twice / 2;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> PrimeGraph::edges() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> es;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
            if (adjacent(i, j)) es.emplace_back(vertices_[i], vertices_[j]);
    return es;
}

bool PrimeGraph::edges_subset_of(const PrimeGraph& g) const {
    if (vertices_ != g.vertices_) return false;
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~g.bits_[w]) return false;
    return true;
}

bool graphs_equal(const PrimeGraph& a, const PrimeGraph& b) {
    return a.vertices_ == b.vertices_ && a.bits_ == b.bits_;
}

namespace {

// Index of the first vertex exceeding the budget; the p + q <= n criterion
// makes every adjacency row a prefix of the vertex list.
std::size_t prefix_cut(const std::vector<std::uint64_t>& vs, std::uint64_t budget) {
    return static_cast<std::size_t>(
        std::upper_bound(vs.begin(), vs.end(), budget) - vs.begin());
}

}  // namespace

PrimeGraph build_symmetric_graph(const PrimeSieve& sieve, std::uint64_t n) {
    if (n < 2) throw std::out_of_range("symmetric graph requires n >= 2");
    PrimeGraph g(sieve.primes_upto(n), "S_" + std::to_string(n));
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::size_t cut = prefix_cut(vs, n - vs[i]);  // p_j <= n - p_i
        g.fill_row_range(i, 0, std::min(cut, i));
        if (cut > i + 1) g.fill_row_range(i, i + 1, cut);
    }
    return g;
}

PrimeGraph build_alternating_graph(const PrimeSieve& sieve, std::uint64_t n) {
    if (n < 5) throw std::out_of_range("alternating graph requires n >= 5");
    PrimeGraph g(sieve.primes_upto(n), "A_" + std::to_string(n));
    const auto& vs = g.vertices();
    // Vertex 2 sits at position 0; 2 ~ p iff p + 2 <= n - 2.
    const std::size_t cut_two = prefix_cut(vs, n - 4);
    g.fill_row_range(0, 1, std::max<std::size_t>(cut_two, 1));
    for (std::size_t i = 1; i < vs.size(); ++i) {
        if (i < cut_two) g.fill_row_range(i, 0, 1);
        const std::size_t cut = prefix_cut(vs, n - vs[i]);  // odd q <= n - p_i
        g.fill_row_range(i, 1, std::min(cut, i));
        if (cut > i + 1) g.fill_row_range(i, i + 1, cut);
    }
    return g;
}

PrimeGraph build_from_spectrum(std::vector<std::uint64_t> primes,
                               const std::vector<std::uint64_t>& orders) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    PrimeGraph g(std::move(primes), "from-spectrum");
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (std::binary_search(orders.begin(), orders.end(), vs[i] * vs[j]))
                g.add_edge(i, j);
    return g;
}

DegreePattern degree_pattern(const PrimeGraph& g) {
    DegreePattern d;
    d.degrees.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) d.degrees.push_back(g.degree(i));
    return d;
}

std::vector<std::uint64_t> lambda_set(const PrimeGraph& g) {
    std::vector<std::uint64_t> full;
    const std::uint32_t want = static_cast<std::uint32_t>(g.vertex_count()) - 1;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (g.degree(i) == want) full.push_back(g.vertices()[i]);
    return full;
}

std::vector<std::vector<std::uint64_t>> connected_components(const PrimeGraph& g) {
    const std::size_t k = g.vertex_count();
    std::vector<bool> seen(k, false);
    std::vector<std::vector<std::uint64_t>> comps;
    for (std::size_t start = 0; start < k; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        std::vector<std::uint64_t> comp;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(g.vertices()[v]);
            for (std::size_t w = 0; w < k; ++w) {
                if (!seen[w] && g.adjacent(v, w)) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

nlohmann::ordered_json graph_to_json(const PrimeGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices();
    auto es = nlohmann::ordered_json::array();
    for (const auto& [p, q] : g.edges()) es.push_back({p, q});
    j["edges"] = std::move(es);
    j["degrees"] = degree_pattern(g).degrees;
    j["source"] = g.source();
    return j;
}

PrimeGraph graph_from_json(const nlohmann::ordered_json& j) {
    PrimeGraph g(j.at("vertices").get<std::vector<std::uint64_t>>(),
                 j.contains("source") ? j.at("source").get<std::string>() : "from-json");
    const auto& vs = g.vertices();
    auto index_of = [&](std::uint64_t p) {
        auto it = std::lower_bound(vs.begin(), vs.end(), p);
        if (it == vs.end() || *it != p) throw std::invalid_argument("edge endpoint not a vertex");
        return static_cast<std::size_t>(it - vs.begin());
    };
    for (const auto& e : j.at("edges")) {
        g.add_edge(index_of(e.at(0).get<std::uint64_t>()), index_of(e.at(1).get<std::uint64_t>()));
    }
    return g;
}

std::string export_graph(const PrimeGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Json:
            return graph_to_json(g).dump();
        case GraphFormat::Dot: {
            std::ostringstream out;
            out << "graph prime_graph {\n";
            for (std::uint64_t p : g.vertices()) out << "  " << p << ";\n";
            for (const auto& [p, q] : g.edges()) out << "  " << p << " -- " << q << ";\n";
            out << "}\n";
            return out.str();
        }
        case GraphFormat::Text: {
            std::ostringstream out;
            const auto& vs = g.vertices();
            out << g.source() << ": " << vs.size() << " vertices, " << g.edge_count()
                << " edges\n";
            for (std::size_t i = 0; i < vs.size(); ++i) {
                out << "  " << vs[i] << " ~";
                for (std::size_t j = 0; j < vs.size(); ++j)
                    if (g.adjacent(i, j)) out << ' ' << vs[j];
                out << '\n';
            }
            return out.str();
        }
    }
    throw std::logic_error("unknown graph format");
}

}  // namespace odchar
