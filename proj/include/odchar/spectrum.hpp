#ifndef ODCHAR_SPECTRUM_HPP
#define ODCHAR_SPECTRUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "odchar/arith.hpp"

namespace odchar {

enum class GroupFamily { Alternating, Symmetric };

/// A_n or S_n of the given degree.
struct GroupKind {
    GroupFamily family;
    std::uint32_t degree;

    static GroupKind alternating(std::uint32_t degree);  // requires degree >= 3
    static GroupKind symmetric(std::uint32_t degree);    // requires degree >= 2

    std::string name() const;  // "A_27" / "S_27"
};

// Membership of m in the element-order spectrum. For S_n: S(m) <= n.
// For A_n: S(m) <= n when m is odd, S(m) <= n - 2 when m is even.
bool has_element_of_order(const GroupKind& g, std::uint64_t m);

// Primes dividing |g|: exactly the primes <= degree. Alternating degrees
// below 5 are rejected.
std::vector<std::uint64_t> spectrum_primes(const PrimeSieve& sieve, const GroupKind& g);

// { m <= cutoff : g has an element of order m }, increasing.
std::vector<std::uint64_t> enumerate_spectrum(const GroupKind& g, std::uint64_t cutoff);

}  // namespace odchar

#endif
