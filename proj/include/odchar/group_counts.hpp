#ifndef ODCHAR_GROUP_COUNTS_HPP
#define ODCHAR_GROUP_COUNTS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odchar/arith.hpp"

namespace odchar {

/// Ingested "order count" table for nu(n), the number of groups of order n.
/// Immutable after load; counts come from data, never from computation.
class GroupCountTable {
public:
    GroupCountTable() = default;

    // Text lines "order<ws>count"; '#' starts a comment. Duplicate orders:
    // last wins, recorded in warnings(). Malformed lines and counts < 1
    // throw std::runtime_error naming the line number.
    static GroupCountTable load(const std::filesystem::path& path);
    static GroupCountTable parse(const std::string& text, const std::string& source_name);

    std::optional<std::uint64_t> nu(std::uint64_t order) const;

    const std::map<std::uint64_t, std::uint64_t>& entries() const { return entries_; }
    const std::string& source() const { return source_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::map<std::uint64_t, std::uint64_t> entries_;
    std::string source_;
    std::vector<std::string> warnings_;
};

// nu_a: number of abelian groups of the factored order, the product of
// partition counts of the exponents. Exact; 1 for the empty factorization.
Bigint nu_abelian(const Factorization& f);

struct NuLowerBound {
    Bigint count;
    bool exact;  // true: stored nu; false: abelian-only lower bound
};

// Stored nu when the table has the order, otherwise nu_abelian.
NuLowerBound nu_lower_bound(const GroupCountTable& table, const Factorization& f);

}  // namespace odchar

#endif
