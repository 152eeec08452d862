#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swlab {

// Exact rational on 64-bit numerator/denominator, reduced and with a
// positive denominator. Intermediate products use 128-bit arithmetic.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }
    // NOLINTNEXTLINE(google-explicit-constructor)
    Rational(long long value) : num_(value), den_(1) {}

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational operator+(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ +
                     static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_wide(n, d);
    }
    Rational operator-(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ -
                     static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_wide(n, d);
    }
    Rational operator*(const Rational& o) const {
        return from_wide(static_cast<__int128>(num_) * o.num_,
                         static_cast<__int128>(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return from_wide(static_cast<__int128>(num_) * o.den_,
                         static_cast<__int128>(den_) * o.num_);
    }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ <
               static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        const __int128 lo = -static_cast<__int128>(INT64_MAX) - 1;
        const __int128 hi = static_cast<__int128>(INT64_MAX);
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rational: value out of 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

}  // namespace swlab
