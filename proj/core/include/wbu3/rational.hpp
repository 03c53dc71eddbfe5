#pragma once

#include <compare>
#include <string>

#include "wbu3/arith.hpp"

namespace wbu3 {

/// Exact fraction with 64-bit numerator and positive 64-bit denominator,
/// always stored reduced.  Intermediates run through 128-bit arithmetic and
/// narrowing is checked, never wrapped.  No floating point anywhere.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int n) : num_(n) {}
    Rational(Int n, Int d) { *this = normalize(n, d); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return normalize(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                         Wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return normalize(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return normalize(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    /// Inverse of str(); accepts "p" and "p/q".
    static Rational parse(const std::string& text);

private:
    static Rational normalize(Wide n, Wide d) {
        if (d == 0)
            throw std::domain_error("Rational: zero denominator");
        if (n == 0)
            return Rational();
        Wide g = wide_gcd(n, d);
        n /= g;
        d /= g;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Rational r;
        r.num_ = narrow_checked(n, "Rational: numerator overflow");
        r.den_ = narrow_checked(d, "Rational: denominator overflow");
        return r;
    }

    Int num_ = 0;
    Int den_ = 1;
};

} // namespace wbu3
