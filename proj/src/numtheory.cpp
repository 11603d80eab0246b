#include "windmill/numtheory.hpp"

#include "windmill/int128.hpp"

#include <array>
#include <bit>
#include <string>

namespace windmill {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m <= 0xFFFFFFFFULL) return a * b % m;  // operands are already reduced below 2^32
    return static_cast<std::uint64_t>(u128(a) * b % m);
}

std::uint64_t pow_mod_raw(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// The first twelve primes are a witness set for every n < 3.3e24; shorter
// prefixes suffice below the listed bounds.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

struct WitnessBound {
    std::uint64_t below;
    std::size_t count;
};

constexpr std::array<WitnessBound, 7> kWitnessBounds = {{
    {1'373'653ULL, 2},
    {25'326'001ULL, 3},
    {3'215'031'751ULL, 4},
    {2'152'302'898'747ULL, 5},
    {3'474'749'660'383ULL, 6},
    {341'550'071'728'321ULL, 7},
    {3'825'123'056'546'413'051ULL, 9},
}};

std::size_t witness_count(std::uint64_t n) {
    for (const WitnessBound& b : kWitnessBounds) {
        if (n < b.below) return b.count;
    }
    return kWitnesses.size();
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = pow_mod_raw(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

void require_modulus(std::uint64_t m) {
    if (m < 2 || m > kMaxModulus) {
        throw DomainError("modulus must lie in [2, 2^62), got " + std::to_string(m));
    }
}

void require_odd_prime(std::uint64_t p) {
    if (p > kMaxModulus || p % 2 == 0 || !is_prime(p)) {
        throw DomainError(std::to_string(p) + " is not an odd prime below 2^62");
    }
}

void require_one_mod_four(std::uint64_t p) {
    require_odd_prime(p);
    if (p % 4 != 1) {
        throw DomainError("p = " + std::to_string(p) + " is not congruent to 1 mod 4; -1 has no square root");
    }
}

Residue canonical_root(std::uint64_t i, std::uint64_t p) { return {std::min(i, p - i), p}; }

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : kWitnesses) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    const std::size_t rounds = witness_count(n);
    for (std::size_t i = 0; i < rounds; ++i) {
        if (!miller_rabin_round(n, kWitnesses[i], d, s)) return false;
    }
    return true;
}

Residue pow_mod(std::int64_t base, std::uint64_t exp, std::uint64_t modulus) {
    require_modulus(modulus);
    auto m = static_cast<std::int64_t>(modulus);
    std::int64_t reduced = base % m;
    if (reduced < 0) reduced += m;
    return {pow_mod_raw(static_cast<std::uint64_t>(reduced), exp, modulus), modulus};
}

int legendre(std::int64_t a, std::uint64_t p) {
    require_odd_prime(p);
    std::uint64_t r = pow_mod(a, (p - 1) / 2, p).value;
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

Residue smallest_nonresidue(std::uint64_t p) {
    require_odd_prime(p);
    for (std::uint64_t n = 2;; ++n) {
        if (legendre(static_cast<std::int64_t>(n), p) == -1) return {n, p};
    }
}

Residue sqrt_minus_one(std::uint64_t p) {
    require_one_mod_four(p);
    std::uint64_t n = smallest_nonresidue(p).value;
    return canonical_root(pow_mod_raw(n, (p - 1) / 4, p), p);
}

Residue wilson_sqrt_minus_one_oracle(std::uint64_t p) {
    require_one_mod_four(p);
    if (p > 100000) throw DomainError("Wilson construction is limited to p <= 100000");
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= (p - 1) / 2; ++k) f = f * k % p;
    return canonical_root(f, p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    require_odd_prime(p);
    if (a % p == 0) throw DomainError("0 has no inverse mod " + std::to_string(p));
    return pow_mod_raw(a % p, p - 2, p);
}

}  // namespace windmill
