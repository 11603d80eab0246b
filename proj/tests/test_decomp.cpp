#include "windmill/decomp.hpp"
#include "windmill/numtheory.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace windmill;

namespace {

std::set<std::pair<Solution, int>> orbit_set(const std::vector<OrbitEntry>& orbits) {
    std::set<std::pair<Solution, int>> out;
    for (const OrbitEntry& o : orbits) out.insert({o.rep, o.size});
    return out;
}

bool descending(const std::vector<Solution>& v) {
    return std::is_sorted(v.begin(), v.end(), [](const Solution& x, const Solution& y) { return x > y; });
}

}  // namespace

TEST_CASE("small primes") {
    CHECK(enumerate_bruteforce(3) == std::vector<Solution>{{3, 1, 0, 0}, {1, 3, 0, 0}});
    CHECK(enumerate_fast(3) == std::vector<Solution>{{3, 1, 0, 0}, {1, 3, 0, 0}});
    CHECK(enumerate_bruteforce(5) == std::vector<Solution>{{5, 1, 0, 0}, {2, 2, 1, 1}, {1, 5, 0, 0}});
    CHECK(enumerate_fast(5) == enumerate_bruteforce(5));
    CHECK(enumerate_fast(13).size() == 7);
}

TEST_CASE("orbit tables for 29, 31 and 37") {
    using Table = std::set<std::pair<Solution, int>>;
    const Table t29{{{29, 1, 0, 0}, 2}, {{14, 2, 1, 1}, 2}, {{7, 4, 1, 1}, 2}, {{9, 3, 2, 1}, 4},
                    {{5, 5, 4, 1}, 2},  {{5, 5, 2, 2}, 1},  {{5, 4, 3, 3}, 2}};
    const Table t31{{{31, 1, 0, 0}, 2}, {{15, 2, 1, 1}, 2}, {{10, 3, 1, 1}, 2}, {{6, 5, 1, 1}, 2},
                    {{7, 4, 3, 1}, 4},  {{9, 3, 2, 2}, 2},  {{5, 5, 3, 2}, 2}};
    const Table t37{{{37, 1, 0, 0}, 2}, {{18, 2, 1, 1}, 2}, {{12, 3, 1, 1}, 2}, {{9, 4, 1, 1}, 2},
                    {{6, 6, 1, 1}, 1},  {{7, 5, 2, 1}, 4},  {{11, 3, 2, 2}, 2}, {{7, 4, 3, 3}, 2},
                    {{5, 5, 4, 3}, 2}};
    CHECK(orbit_set(vierergruppe_orbits(enumerate_bruteforce(29))) == t29);
    CHECK(orbit_set(vierergruppe_orbits(enumerate_bruteforce(31))) == t31);
    CHECK(orbit_set(vierergruppe_orbits(enumerate_fast(37))) == t37);
    CHECK(enumerate_bruteforce(29).size() == 15);
    CHECK(enumerate_bruteforce(31).size() == 16);
    CHECK(enumerate_bruteforce(37).size() == 19);
}

TEST_CASE("solution count is (p + 1) / 2 below 1e4") {
    for (std::int64_t p : oracle::odd_primes_up_to(10'000)) {
        const auto sols = enumerate_bruteforce(p);
        REQUIRE(sols.size() == static_cast<std::size_t>((p + 1) / 2));
        if (p < 2000) REQUIRE(descending(sols));
    }
}

TEST_CASE("fast enumeration equals brute force below 2000") {
    for (std::int64_t p : oracle::odd_primes_up_to(2000)) {
        CAPTURE(p);
        REQUIRE(enumerate_fast(p) == enumerate_bruteforce(p));
    }
}

TEST_CASE("brute force equals the four-loop scan below 200") {
    for (std::int64_t p : oracle::odd_primes_up_to(200)) {
        const auto sols = enumerate_bruteforce(p);
        REQUIRE(std::set<Solution>(sols.begin(), sols.end()) == oracle::scan_solutions(p));
    }
}

TEST_CASE("enumeration input validation") {
    CHECK_THROWS_AS(enumerate_bruteforce(4), DomainError);
    CHECK_THROWS_AS(enumerate_bruteforce(2), DomainError);
    CHECK_THROWS_AS(enumerate_fast(15), DomainError);
    CHECK_THROWS_AS(enumerate_bruteforce(1'000'003), DomainError);
}

TEST_CASE("orbit closure and parity") {
    for (std::int64_t p : oracle::odd_primes_up_to(2000)) {
        const auto sols = enumerate_bruteforce(p);
        const auto orbits = vierergruppe_orbits(sols);
        std::size_t covered = 0;
        int fixed = 0;
        for (const OrbitEntry& o : orbits) {
            REQUIRE((o.size == 1 || o.size == 2 || o.size == 4));
            covered += static_cast<std::size_t>(o.size);
            if (o.size == 1) ++fixed;
            REQUIRE(o.rep.a >= o.rep.b);
        }
        REQUIRE(covered == sols.size());
        // |S_p| is odd exactly when some solution is fixed by the whole group.
        REQUIRE(fixed == (p % 4 == 1 ? 1 : 0));
        REQUIRE(sols.size() % 2 == static_cast<std::size_t>(fixed));
    }
}

TEST_CASE("orbits reject sets that are not closed") {
    CHECK_THROWS_AS(vierergruppe_orbits({{6, 2, 1, 1}}), DomainError);
    CHECK(vierergruppe_orbits({{6, 2, 1, 1}, {2, 6, 1, 1}}) == std::vector<OrbitEntry>{{{6, 2, 1, 1}, 2}});
    CHECK(vierergruppe_orbits({}).empty());
}

TEST_CASE("orbit examples for p = 13") {
    const auto orbits = vierergruppe_orbits(enumerate_bruteforce(13));
    const std::set<std::pair<Solution, int>> expected{
        {{13, 1, 0, 0}, 2}, {{6, 2, 1, 1}, 2}, {{4, 3, 1, 1}, 2}, {{3, 3, 2, 2}, 1}};
    CHECK(orbit_set(orbits) == expected);
}

TEST_CASE("two squares methods agree") {
    CHECK(two_squares_grace(13) == std::pair<std::int64_t, std::int64_t>{3, 2});
    CHECK(two_squares_fixed_point(13) == std::pair<std::int64_t, std::int64_t>{3, 2});
    CHECK(two_squares_grace(29) == std::pair<std::int64_t, std::int64_t>{5, 2});
    CHECK(two_squares_grace(5) == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK_THROWS_AS(two_squares_grace(7), DomainError);
    CHECK_THROWS_AS(two_squares_fixed_point(7), DomainError);
    CHECK_THROWS_AS(two_squares_grace(25), DomainError);
    for (std::int64_t p : oracle::odd_primes_up_to(5000)) {
        if (p % 4 != 1) continue;
        const auto g = two_squares_grace(p);
        REQUIRE(g.first * g.first + g.second * g.second == p);
        REQUIRE(g.first > g.second);
        REQUIRE(two_squares_fixed_point(p) == g);
    }
}

TEST_CASE("two squares near 2^62") {
    const std::int64_t p = 4611686018427387817;
    const auto [a, b] = two_squares_grace(p);
    CHECK(i128(a) * a + i128(b) * b == p);
}

TEST_CASE("irreducible matrices") {
    CHECK(irreducible_count(1) == 1);
    CHECK(irreducible_count(2) == 2);
    CHECK(irreducible_count(4) == 5);
    CHECK(irreducible_count(6) == 8);
    CHECK(irreducible_enumerate(1) == std::vector<IrreducibleMatrix>{{1, 0, 0, 1}});
    CHECK_THROWS_AS(irreducible_count(0), DomainError);
    CHECK_THROWS_AS(irreducible_enumerate(10'001), DomainError);

    for (std::int64_t n = 1; n <= 300; ++n) {
        const auto list = irreducible_enumerate(n);
        REQUIRE(static_cast<std::int64_t>(list.size()) == irreducible_count(n));
        for (const auto& m : list) {
            REQUIRE(m.a * m.d - m.b * m.c == n);
            REQUIRE(std::min(m.a, m.d) > std::max(m.b, m.c));
        }
        REQUIRE(std::is_sorted(list.begin(), list.end(), [](const auto& x, const auto& y) { return x > y; }));
        if (n <= 40) {
            auto scan = oracle::scan_irreducible(n);
            std::sort(scan.begin(), scan.end(), [](const auto& x, const auto& y) { return x > y; });
            REQUIRE(list == scan);
        }
    }
}
