#include "windmill/decomp.hpp"

#include "windmill/numtheory.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace windmill {

namespace {

void require_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0 || static_cast<std::uint64_t>(p) > kMaxModulus ||
        !is_prime(static_cast<std::uint64_t>(p))) {
        throw DomainError(std::to_string(p) + " is not an odd prime");
    }
}

void require_one_mod_four(std::int64_t p) {
    require_odd_prime(p);
    if (p % 4 != 1) {
        throw DomainError("p = " + std::to_string(p) + " is congruent to 3 mod 4 and is not a sum of two squares");
    }
}

void sort_descending(std::vector<Solution>& sols) { std::sort(sols.begin(), sols.end(), std::greater<>()); }

}  // namespace

std::vector<Solution> enumerate_bruteforce(std::int64_t p) {
    require_odd_prime(p);
    if (p > 1'000'000) throw DomainError("brute-force enumeration is limited to p <= 1000000");
    std::vector<Solution> out;
    for (std::int64_t c = 0; c * c < p; ++c) {
        for (std::int64_t d = 0; d * d < p; ++d) {
            const std::int64_t m = std::max(c, d);
            const std::int64_t n = p - c * d;
            if (n < (m + 1) * (m + 1)) continue;
            for (std::int64_t a = m + 1; a * a <= n; ++a) {
                if (n % a != 0) continue;
                const std::int64_t b = n / a;
                out.push_back({a, b, c, d});
                if (a != b) out.push_back({b, a, c, d});
            }
        }
    }
    sort_descending(out);
    return out;
}

std::vector<Solution> enumerate_fast(std::int64_t p) {
    require_odd_prime(p);
    std::vector<Solution> out{{p, 1, 0, 0}, {1, p, 0, 0}};
    for (std::int64_t mu = 2; mu <= (p - 1) / 2; ++mu) {
        out.push_back(fast_solution_for_pair(SlopeClass::finite(p, mu)).second);
    }
    sort_descending(out);
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw std::logic_error("two slope pairs produced the same solution for p = " + std::to_string(p));
    }
    return out;
}

std::vector<OrbitEntry> vierergruppe_orbits(const std::vector<Solution>& sols) {
    std::vector<Solution> all(sols);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<OrbitEntry> out;
    for (const Solution& s : all) {
        std::array<Solution, 4> orbit{s, Solution{s.b, s.a, s.c, s.d}, Solution{s.a, s.b, s.d, s.c},
                                      Solution{s.b, s.a, s.d, s.c}};
        std::sort(orbit.begin(), orbit.end());
        const auto end = std::unique(orbit.begin(), orbit.end());
        for (auto it = orbit.begin(); it != end; ++it) {
            if (!std::binary_search(all.begin(), all.end(), *it)) {
                std::ostringstream msg;
                msg << "solution set is not closed under the four-group: " << *it << " missing";
                throw DomainError(msg.str());
            }
        }
        // The largest member represents its orbit: a >= b and c >= d.
        if (*(end - 1) != s) continue;
        out.push_back({s, static_cast<int>(end - orbit.begin())});
    }
    std::sort(out.begin(), out.end(), [](const OrbitEntry& x, const OrbitEntry& y) { return x.rep > y.rep; });
    return out;
}

std::pair<std::int64_t, std::int64_t> two_squares_fixed_point(std::int64_t p) {
    require_one_mod_four(p);
    for (const OrbitEntry& o : vierergruppe_orbits(enumerate_fast(p))) {
        if (o.size == 1) return {o.rep.a, o.rep.c};
    }
    throw std::logic_error("no fixed point among the solutions for p = " + std::to_string(p));
}

std::pair<std::int64_t, std::int64_t> two_squares_grace(std::int64_t p) {
    require_one_mod_four(p);
    const auto iota = static_cast<std::int64_t>(sqrt_minus_one(static_cast<std::uint64_t>(p)).value);
    const IVec2 m = gauss_reduce(LatticeBasis({p, 0}, {-iota, 1})).u();
    std::int64_t a = m.x < 0 ? -m.x : m.x;
    std::int64_t b = m.y < 0 ? -m.y : m.y;
    if (a < b) std::swap(a, b);
    if (i128(a) * a + i128(b) * b != p) throw std::logic_error("reduced vector is not a two-squares representation");
    return {a, b};
}

std::int64_t irreducible_count(std::int64_t n) {
    if (n < 1 || n > 1'000'000'000) throw DomainError("irreducible_count requires 1 <= n <= 1e9");
    std::int64_t total = 0;
    for (std::int64_t k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        // k <= sqrt(n) <= n/k, so n/k is the divisor with square >= n.
        const std::int64_t d = n / k;
        total += d + 1 - k;
    }
    return total;
}

std::vector<IrreducibleMatrix> irreducible_enumerate(std::int64_t n) {
    if (n < 1 || n > 10'000) throw DomainError("irreducible_enumerate requires 1 <= n <= 1e4");
    std::vector<IrreducibleMatrix> out;
    // ad = n + bc with a, d > m = max(b, c) forces n + m^2 >= (m + 1)^2.
    const std::int64_t bound = (n - 1) / 2;
    for (std::int64_t b = 0; b <= bound; ++b) {
        for (std::int64_t c = 0; c <= bound; ++c) {
            const std::int64_t m = std::max(b, c);
            const std::int64_t target = n + b * c;
            if (target < (m + 1) * (m + 1)) continue;
            for (std::int64_t a = m + 1; a * a <= target; ++a) {
                if (target % a != 0) continue;
                const std::int64_t d = target / a;
                out.push_back({a, b, c, d});
                if (a != d) out.push_back({d, b, c, a});
            }
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace windmill
