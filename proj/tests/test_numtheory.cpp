#include "windmill/numtheory.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace windmill;

TEST_CASE("is_prime small values") {
    CHECK(is_prime(2));
    CHECK(is_prime(29));
    CHECK_FALSE(is_prime(33));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
}

TEST_CASE("is_prime agrees with trial division below 1e6") {
    for (std::uint64_t n = 0; n < 1'000'000; ++n) {
        REQUIRE_MESSAGE(is_prime(n) == oracle::trial_division_is_prime(n), "n = " << n);
    }
}

TEST_CASE("is_prime on 64-bit edge cases") {
    CHECK(is_prime(18446744073709551557ULL));                 // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));           // 2^64 - 1
    CHECK_FALSE(is_prime(3215031751ULL));                     // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));            // strong pseudoprime to bases up to 23
    CHECK_FALSE(is_prime(561));                               // Carmichael
    CHECK(is_prime(1'000'000'000'039ULL));
    CHECK_FALSE(is_prime(1'000'000'007ULL * 998'244'353ULL));
}

TEST_CASE("pow_mod") {
    CHECK(pow_mod(2, 3, 13).value == 8);
    CHECK(pow_mod(5, 12, 13).value == 1);
    CHECK(pow_mod(123456, 0, 7).value == 1);
    CHECK(pow_mod(-1, 3, 7).value == 6);
    CHECK(pow_mod(2, 10, 13) == Residue{10, 13});
    CHECK_THROWS_AS(pow_mod(2, 3, 1), DomainError);
    CHECK_THROWS_AS(pow_mod(2, 3, std::uint64_t{1} << 62), DomainError);

    // Near the 62-bit bound the products need 128 bits.
    const std::uint64_t m = kMaxModulus;
    CHECK(pow_mod(static_cast<std::int64_t>(m - 1), 2, m).value == 1);
}

TEST_CASE("Fermat little theorem on sampled residues") {
    std::mt19937_64 rng(7);
    for (std::int64_t p : oracle::odd_primes_up_to(2000)) {
        for (int i = 0; i < 5; ++i) {
            const auto g = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1)) + 1;
            REQUIRE(pow_mod(g, static_cast<std::uint64_t>(p - 1), static_cast<std::uint64_t>(p)).value == 1);
        }
    }
}

TEST_CASE("legendre") {
    CHECK(legendre(2, 13) == -1);
    CHECK(legendre(0, 13) == 0);
    CHECK(legendre(26, 13) == 0);
    CHECK(legendre(4, 13) == 1);
    CHECK(legendre(-1, 13) == 1);
    CHECK(legendre(-1, 7) == -1);
    CHECK_THROWS_AS(legendre(2, 15), DomainError);
    CHECK_THROWS_AS(legendre(2, 2), DomainError);

    // Squares mod 13 are exactly {1, 3, 4, 9, 10, 12}.
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < 13; ++x) squares.insert(x * x % 13);
    for (std::int64_t a = 1; a < 13; ++a) CHECK(legendre(a, 13) == (squares.contains(a) ? 1 : -1));
}

TEST_CASE("legendre is multiplicative") {
    std::mt19937_64 rng(11);
    const auto primes = oracle::odd_primes_up_to(5000);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t p = primes[rng() % primes.size()];
        const auto a = static_cast<std::int64_t>(rng() % 100000);
        const auto b = static_cast<std::int64_t>(rng() % 100000);
        const auto up = static_cast<std::uint64_t>(p);
        REQUIRE(legendre(a * b, up) == legendre(a, up) * legendre(b, up));
    }
}

TEST_CASE("smallest_nonresidue") {
    CHECK(smallest_nonresidue(13).value == 2);
    CHECK(smallest_nonresidue(17).value == 3);
    CHECK(smallest_nonresidue(3).value == 2);
    CHECK(smallest_nonresidue(7).value == 3);
}

TEST_CASE("sqrt_minus_one examples") {
    CHECK(sqrt_minus_one(5).value == 2);
    CHECK(sqrt_minus_one(13).value == 5);
    CHECK(sqrt_minus_one(17).value == 4);
    CHECK_THROWS_AS(sqrt_minus_one(7), DomainError);
    CHECK_THROWS_AS(sqrt_minus_one(21), DomainError);
}

TEST_CASE("wilson oracle examples") {
    CHECK(wilson_sqrt_minus_one_oracle(5).value == 2);
    CHECK(wilson_sqrt_minus_one_oracle(13).value == 5);
    CHECK(wilson_sqrt_minus_one_oracle(29).value == 12);
    CHECK_THROWS_AS(wilson_sqrt_minus_one_oracle(100'049), DomainError);
    CHECK_THROWS_AS(wilson_sqrt_minus_one_oracle(11), DomainError);
}

TEST_CASE("square roots of -1 for primes 1 mod 4 below 1e4") {
    for (std::int64_t p : oracle::odd_primes_up_to(10'000)) {
        if (p % 4 != 1) continue;
        const auto up = static_cast<std::uint64_t>(p);
        const std::uint64_t i = sqrt_minus_one(up).value;
        REQUIRE((i * i + 1) % up == 0);
        REQUIRE(i == oracle::scan_sqrt_minus_one(up).value());
        REQUIRE(wilson_sqrt_minus_one_oracle(up).value == i);
    }
}

TEST_CASE("inverse_mod") {
    CHECK(inverse_mod(7, 13) == 2);
    CHECK(inverse_mod(12, 13) == 12);
    CHECK_THROWS_AS(inverse_mod(26, 13), DomainError);
}
