#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "stg/errors.hpp"

namespace stg {

// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
// No floating point enters or leaves this type.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long n, long d) : v_(static_cast<signed long>(n), static_cast<signed long>(d)) {
        if (d == 0) throw InvariantError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p", "-p/q" with arbitrary-precision integers.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvariantError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

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

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // "p" when integral, "p/q" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

} // namespace stg
