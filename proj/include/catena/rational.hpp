#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "checked.hpp"
#include "vec.hpp"

// Exact rationals on int64, always in lowest terms with positive denominator.

namespace catena {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(checked_neg(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) fail(errc::bad_input, "rational division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) fail(errc::bad_input, "rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        std::int64_t g = gcd64(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

using RatVector = std::vector<Rational>;

inline Rational dot(const IntVector& a, const RatVector& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

// smallest positive integer multiple of v that is an integer vector, divided
// by the gcd of its entries; used to turn a rational grading into weights
inline IntVector primitive_integer_multiple(const RatVector& v) {
    std::int64_t l = 1;
    for (const auto& q : v) l = lcm64(l, q.den());
    IntVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = checked_mul(v[i].num(), l / v[i].den());
    std::int64_t g = 0;
    for (auto x : w) g = gcd64(g, x);
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

} // namespace catena
