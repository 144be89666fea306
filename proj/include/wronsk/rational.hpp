#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace wronsk {

// Exact rational scalar backed by GMP. Invariants: denominator > 0,
// gcd(|num|, den) = 1, zero is 0/1. All arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);

    // Parses a decimal integer of arbitrary size.
    static Rational from_integer_string(const std::string& digits);
    static Rational factorial(unsigned long n);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    // "n" when the denominator is 1, else "n/m".
    std::string str() const;

    // Decimal digits of numerator / denominator; used by the bindings.
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    // True iff the denominator is 1 and the numerator fits in `long`.
    bool fits_long() const;
    long to_long() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace wronsk
