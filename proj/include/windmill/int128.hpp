#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace windmill {

using i128 = __int128;
using u128 = unsigned __int128;

/// Thrown when an input violates an operation's precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 62;

constexpr i128 abs128(i128 v) { return v < 0 ? -v : v; }

constexpr int sign128(i128 v) { return (v > 0) - (v < 0); }

constexpr i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Floor division for a signed numerator and a positive denominator.
constexpr i128 floor_div(i128 num, i128 den) {
    i128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

constexpr i128 ceil_div(i128 num, i128 den) { return -floor_div(-num, den); }

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? u128(0) - u128(v) : u128(v);
    std::string out;
    while (u != 0) {
        out.insert(out.begin(), char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) out.insert(out.begin(), '-');
    return out;
}

/// Narrows to int64, throwing when the value does not fit.
inline std::int64_t narrow64(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
        throw std::overflow_error("value does not fit in 64 bits: " + to_string(v));
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace windmill
