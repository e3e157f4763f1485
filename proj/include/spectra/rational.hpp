#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace spectra {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator. All
/// intermediate products go through 128-bit arithmetic and throw
/// std::overflow_error if the reduced result does not fit, so the exact
/// path fails loudly instead of silently rounding.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        reduce_from(static_cast<__int128>(n), static_cast<__int128>(d));
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const { return -((-*this).floor()); }

    /// Representative of this value modulo m, in [0, m). Requires m > 0.
    Rational mod(const Rational& m) const {
        if (!(Rational(0) < m)) throw std::domain_error("Rational::mod: modulus must be positive");
        Rational q((*this / m).floor());
        return *this - q * m;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct raw_tag {};
    Rational(long long n, long long d, raw_tag) : num_(n), den_(d) {}

    using i128 = __int128;

    static Rational make(i128 n, i128 d) {
        Rational r;
        r.reduce_from(n, d);
        return r;
    }

    void reduce_from(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = static_cast<i128>(INT64_MIN);
        constexpr i128 hi = static_cast<i128>(INT64_MAX);
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    long long num_;
    long long den_;
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.to_double(); }

inline double abs_value(double x) { return x < 0 ? -x : x; }
inline Rational abs_value(const Rational& x) { return x.abs(); }

/// lcm of two positive 64-bit integers, overflow-checked.
inline long long checked_lcm(long long a, long long b) {
    long long g = std::gcd(a, b);
    __int128 l = static_cast<__int128>(a / g) * b;
    if (l > INT64_MAX) throw std::overflow_error("lcm exceeds 64-bit range");
    return static_cast<long long>(l);
}

}  // namespace spectra
