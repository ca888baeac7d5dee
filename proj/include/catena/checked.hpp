#pragma once

#include <cstdint>

#include "error.hpp"

// All arithmetic in the library goes through these helpers.  The contract is
// exactness over int64: a computation either returns the true value or throws
// errc::overflow, it never wraps.

namespace catena {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "int64 overflow in +");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "int64 overflow in -");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "int64 overflow in *");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

// gcd on magnitudes, gcd(0,0) = 0.
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(checked_abs(a) / gcd64(a, b), checked_abs(b));
}

} // namespace catena
