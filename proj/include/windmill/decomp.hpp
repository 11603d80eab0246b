#pragma once

#include "windmill/windmill.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace windmill {

/// A Klein four-group orbit: decreasing representative and orbit size.
struct OrbitEntry {
    Solution rep;
    int size = 0;

    bool operator==(const OrbitEntry&) const = default;
};

/// [[a, b], [c, d]] with ad - bc = n and min(a, d) > max(b, c).
struct IrreducibleMatrix {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;

    bool operator==(const IrreducibleMatrix&) const = default;
    auto operator<=>(const IrreducibleMatrix&) const = default;
};

// Solution lists are returned in descending lexicographic order of (a, b, c, d).

/// Direct scan over (c, d) and divisors of p - cd. Requires p <= 1e6.
std::vector<Solution> enumerate_bruteforce(std::int64_t p);

/// The two degenerate solutions plus one solution per slope pair {mu, p - mu}.
std::vector<Solution> enumerate_fast(std::int64_t p);

/// Throws DomainError when sols is not closed under swapping (a, b) and (c, d).
std::vector<OrbitEntry> vierergruppe_orbits(const std::vector<Solution>& sols);

/// (a, c) with a > c and a^2 + c^2 = p, read off the orbit of size one.
std::pair<std::int64_t, std::int64_t> two_squares_fixed_point(std::int64_t p);

/// (a, b) with a > b and a^2 + b^2 = p from a minimal vector of the lattice
/// spanned by (p, 0) and (-i, 1), i^2 = -1 mod p.
std::pair<std::int64_t, std::int64_t> two_squares_grace(std::int64_t p);

/// Sum over divisors d of n with d^2 >= n of (d + 1 - n/d). Requires n <= 1e9.
std::int64_t irreducible_count(std::int64_t n);

/// Requires n <= 1e4. Descending lexicographic order.
std::vector<IrreducibleMatrix> irreducible_enumerate(std::int64_t n);

}  // namespace windmill
