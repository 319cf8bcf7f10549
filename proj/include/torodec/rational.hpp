#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "torodec/errors.hpp"

namespace torodec {

// Exact rational arithmetic on small values.  Charges live in (1/6)Z; the
// case-analysis checks also use twelfths.  No floating point anywhere.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t num) : num_(num) {}
    constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator-(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator*(Rational a, Rational b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    constexpr Rational operator-() const { return Rational(-num_, den_); }
    Rational &operator+=(Rational b) { return *this = *this + b; }
    Rational &operator-=(Rational b) { return *this = *this - b; }

    friend constexpr bool operator==(Rational a, Rational b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }

    // "p/q", or "p" when q == 1
    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // "p/6" form used by charge reports.  Throws InternalError when the
    // value is not a multiple of 1/6.
    std::string as_sixths() const {
        if (6 % den_ != 0)
            throw InternalError("charge " + str() + " is not a multiple of 1/6");
        return std::to_string(num_ * (6 / den_)) + "/6";
    }

private:
    constexpr void normalize() {
        if (den_ == 0)
            throw DomainError("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace torodec
