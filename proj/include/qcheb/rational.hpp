#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace qcheb {

// Exact rational scalar backed by GMP. Always canonical: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}
    Rational(long num, long den);

    // Accepts "p" or "p/q" with optional leading '-', decimal digits only.
    // Throws std::invalid_argument on anything else (including q = 0).
    static Rational fromString(const std::string& text);

    bool isZero() const { return sgn(v_) == 0; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string numeratorString() const { return v_.get_num().get_str(); }
    std::string denominatorString() const { return v_.get_den().get_str(); }
    // "p/q", or plain "p" when the denominator is 1.
    std::string str() const;

    Rational pow(unsigned exponent) const;
    Rational abs() const;
    Rational reciprocal() const;  // throws std::invalid_argument on zero

    const mpq_class& raw() const { return v_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& r) { v_ += r.v_; return *this; }
    Rational& operator-=(const Rational& r) { v_ -= r.v_; return *this; }
    Rational& operator*=(const Rational& r) { v_ *= r.v_; return *this; }
    Rational& operator/=(const Rational& r);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace qcheb
