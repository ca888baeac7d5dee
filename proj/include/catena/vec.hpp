#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "checked.hpp"

// Dense integer vectors and row-major matrices.  A matrix holds one generator
// (or one relation) per row; all rows share a common width.

namespace catena {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

inline bool is_zero(const IntVector& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

// coordinate sum; for a factorization this is its length
inline std::int64_t coord_sum(const IntVector& v) {
    std::int64_t s = 0;
    for (auto x : v) s = checked_add(s, x);
    return s;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

inline IntVector scaled(const IntVector& a, std::int64_t c) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], c);
    return r;
}

// a -= c*b, in place
inline void sub_scaled(IntVector& a, std::int64_t c, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_sub(a[i], checked_mul(c, b[i]));
}

inline IntVector min_of(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
    return r;
}

inline IntVector max_of(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool leq(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool nonneg(const IntVector& a) {
    for (auto x : a)
        if (x < 0) return false;
    return true;
}

inline IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector e(n, 0);
    e[i] = 1;
    return e;
}

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = unit_vector(n, i);
    return m;
}

inline std::size_t matrix_width(const IntMatrix& m) { return m.empty() ? 0 : m.front().size(); }

// x*M where x is a row vector with one entry per row of M
inline IntVector row_times_matrix(const IntVector& x, const IntMatrix& m) {
    IntVector r(matrix_width(m), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] = checked_add(r[j], checked_mul(x[i], m[i][j]));
    }
    return r;
}

struct VecHash {
    std::size_t operator()(const IntVector& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::string to_string(const IntVector& v, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace catena
