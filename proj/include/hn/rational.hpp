#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "hn/errors.hpp"

namespace hn {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
    return r;
}

// Exact reduced rational with a positive denominator.  Slopes are values
// of this type; degrees are plain Int.  All arithmetic is exact and
// overflow-checked.
class Rational {
public:
    Rational() = default;
    Rational(Int n) : num_(n) {} // NOLINT: implicit by design, integers are slopes
    Rational(Int n, Int d) : num_(n), den_(d) {
        if (den_ == 0) throw InvalidInput("rational with zero denominator");
        normalize();
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    Rational operator-() const { return Rational(checked_sub(0, num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InvalidInput("rational division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Cross-multiplication in 128 bits, exact at any representable value.
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Exact serialized form, always "num/den" (e.g. "0/1", "-3/2").
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = checked_sub(0, num_);
            den_ = checked_sub(0, den_);
        }
        Int g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_ = 0;
    Int den_ = 1;
};

} // namespace hn
