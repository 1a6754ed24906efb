#ifndef ODCHAR_PRIME_GRAPH_HPP
#define ODCHAR_PRIME_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "odchar/arith.hpp"
#include "odchar/spectrum.hpp"

namespace odchar {

/// Degrees listed by increasing prime. Equality is plain tuple equality.
struct DegreePattern {
    std::vector<std::uint32_t> degrees;
    bool operator==(const DegreePattern&) const = default;
    std::string to_string() const;  // "(8, 8, 7, ...)"
};

/// Undirected loop-free graph on a strictly increasing set of primes,
/// adjacency stored as a symmetric bit matrix. Immutable once built.
class PrimeGraph {
public:
    PrimeGraph(std::vector<std::uint64_t> vertices, std::string source);

    const std::vector<std::uint64_t>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::string& source() const { return source_; }

    bool adjacent(std::size_t i, std::size_t j) const;
    std::uint32_t degree(std::size_t i) const;

    void add_edge(std::size_t i, std::size_t j);  // used by builders only

    // Sets row i bits [j_begin, j_end) wholesale; the caller must apply a
    // symmetric relation and must not include i itself.
    void fill_row_range(std::size_t i, std::size_t j_begin, std::size_t j_end);

    std::size_t edge_count() const;
    // Edges as (p, q) prime pairs with p < q, lexicographically sorted.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const;

    // True when this graph's edge set is contained in g's; requires
    // identical vertex sets.
    bool edges_subset_of(const PrimeGraph& g) const;

    friend bool graphs_equal(const PrimeGraph& a, const PrimeGraph& b);

private:
    std::vector<std::uint64_t> vertices_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
    std::string source_;
};

// Gamma(S_n): vertices = primes <= n, edge p-q iff p + q <= n. n >= 2.
PrimeGraph build_symmetric_graph(const PrimeSieve& sieve, std::uint64_t n);

// Gamma(A_n): vertices = primes <= n; for odd p, q an edge iff p + q <= n,
// and 2-p an edge iff p + 2 <= n - 2. n >= 5.
PrimeGraph build_alternating_graph(const PrimeSieve& sieve, std::uint64_t n);

// Graph on the given primes with edge p-q iff p*q is among the orders.
PrimeGraph build_from_spectrum(std::vector<std::uint64_t> primes,
                               const std::vector<std::uint64_t>& orders);

DegreePattern degree_pattern(const PrimeGraph& g);

// Vertices adjacent to every other vertex.
std::vector<std::uint64_t> lambda_set(const PrimeGraph& g);

// Maximal connected vertex sets, ordered by smallest member (so the
// component containing 2 comes first when present).
std::vector<std::vector<std::uint64_t>> connected_components(const PrimeGraph& g);

// Identical vertex sets and identical edge sets; no relabeling.
bool graphs_equal(const PrimeGraph& a, const PrimeGraph& b);

enum class GraphFormat { Dot, Json, Text };

std::string export_graph(const PrimeGraph& g, GraphFormat format);
nlohmann::ordered_json graph_to_json(const PrimeGraph& g);
PrimeGraph graph_from_json(const nlohmann::ordered_json& j);

}  // namespace odchar

#endif
