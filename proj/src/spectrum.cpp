#include "odchar/spectrum.hpp"

#include <stdexcept>

namespace odchar {

GroupKind GroupKind::alternating(std::uint32_t degree) {
    if (degree < 3)
        throw std::invalid_argument("alternating degree must be >= 3");
    return {GroupFamily::Alternating, degree};
}

GroupKind GroupKind::symmetric(std::uint32_t degree) {
    if (degree < 2)
        throw std::invalid_argument("symmetric degree must be >= 2");
    return {GroupFamily::Symmetric, degree};
}

std::string GroupKind::name() const {
    return (family == GroupFamily::Alternating ? "A_" : "S_") + std::to_string(degree);
}

bool has_element_of_order(const GroupKind& g, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("element order must be >= 1");
    const std::uint64_t s = landau_sum(m);
    if (g.family == GroupFamily::Symmetric) return s <= g.degree;
    if (m % 2 == 1) return s <= g.degree;
    return g.degree >= 2 && s <= static_cast<std::uint64_t>(g.degree) - 2;
}

std::vector<std::uint64_t> spectrum_primes(const PrimeSieve& sieve, const GroupKind& g) {
    if (g.family == GroupFamily::Alternating && g.degree < 5)
        throw std::invalid_argument("spectrum_primes unsupported for alternating degree < 5");
    return sieve.primes_upto(g.degree);
}

std::vector<std::uint64_t> enumerate_spectrum(const GroupKind& g, std::uint64_t cutoff) {
    std::vector<std::uint64_t> orders;
    for (std::uint64_t m = 1; m <= cutoff; ++m)
        if (has_element_of_order(g, m)) orders.push_back(m);
    return orders;
}

}  // namespace odchar
