#pragma once

#include <compare>
#include <cstdint>

namespace windmill {

/// An element of Z/modulus, stored as its least nonnegative representative.
struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 2;

    constexpr bool operator==(const Residue&) const = default;
};

/// Moduli accepted by the public modular API (62 bits).
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 62) - 1;

/// Deterministic over the whole 64-bit range (Miller-Rabin, fixed witnesses).
bool is_prime(std::uint64_t n);

/// base^exp mod modulus by binary exponentiation with 128-bit products.
/// Negative bases are reduced to their least nonnegative residue first.
Residue pow_mod(std::int64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Legendre symbol via Euler's criterion. Returns -1, 0 or 1.
int legendre(std::int64_t a, std::uint64_t p);

/// Least n >= 2 that is not a square mod p.
Residue smallest_nonresidue(std::uint64_t p);

/// Square root of -1 mod p as n^((p-1)/4) for a nonresidue n, canonicalized
/// to min(i, p - i). Throws DomainError unless p is a prime = 1 mod 4.
Residue sqrt_minus_one(std::uint64_t p);

/// ((p-1)/2)! mod p, canonicalized like sqrt_minus_one. O(p); p <= 1e5.
Residue wilson_sqrt_minus_one_oracle(std::uint64_t p);

/// Inverse of a mod p for prime p; a must not be divisible by p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace windmill
