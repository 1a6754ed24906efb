#include "odchar/group_counts.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace odchar {

GroupCountTable GroupCountTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group-count table: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

GroupCountTable GroupCountTable::parse(const std::string& text, const std::string& source_name) {
    GroupCountTable table;
    table.source_ = source_name;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::uint64_t order = 0;
        long long count = 0;
        if (!(fields >> order)) continue;  // blank or comment-only line
        std::string where = source_name + ":" + std::to_string(lineno);
        if (!(fields >> count)) throw std::runtime_error(where + ": missing count");
        std::string extra;
        if (fields >> extra) throw std::runtime_error(where + ": trailing token '" + extra + "'");
        if (order < 1) throw std::runtime_error(where + ": order must be >= 1");
        if (count < 1) throw std::runtime_error(where + ": count must be >= 1");
        if (auto it = table.entries_.find(order); it != table.entries_.end()) {
            table.warnings_.push_back(where + ": duplicate order " + std::to_string(order) +
                                      ", keeping the later value");
            it->second = static_cast<std::uint64_t>(count);
        } else {
            table.entries_.emplace(order, static_cast<std::uint64_t>(count));
        }
    }
    // nu_a(n) <= nu(n) must hold for every ingested entry.
    for (const auto& [order, count] : table.entries_) {
        if (nu_abelian(Factorization::of(order)) > count)
            throw std::runtime_error(source_name + ": nu(" + std::to_string(order) + ") = " +
                                     std::to_string(count) +
                                     " is below the abelian group count");
    }
    return table;
}

std::optional<std::uint64_t> GroupCountTable::nu(std::uint64_t order) const {
    auto it = entries_.find(order);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

Bigint nu_abelian(const Factorization& f) {
    Bigint product = 1;
    for (const auto& fp : f.parts()) product *= partition_count(fp.exponent);
    return product;
}

NuLowerBound nu_lower_bound(const GroupCountTable& table, const Factorization& f) {
    const Bigint value = f.value();
    if (value.fits_ulong_p()) {
        if (auto stored = table.nu(value.get_ui())) return {Bigint(*stored), true};
    }
    return {nu_abelian(f), false};
}

}  // namespace odchar
