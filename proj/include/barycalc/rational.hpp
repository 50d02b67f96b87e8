#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace barycalc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar, always in reduced canonical form with positive
// denominator. Every value in the library is one of these; there is no
// floating point anywhere.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    // Accepts "num/den" or a bare integer, with optional sign. Throws
    // ParseError on anything else (including zero denominators).
    static Rational from_string(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }
    Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }
    Rational reciprocal() const;

    // Canonical "num/den" form, e.g. "1/2", "-3/1", "0/1".
    std::string to_string() const;

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_rational value_;
};

// Coordinate vector over Q, used for hull-model points and directions.
using Coordinates = std::vector<Rational>;

Coordinates add(const Coordinates& a, const Coordinates& b);
Coordinates sub(const Coordinates& a, const Coordinates& b);
Coordinates scaled(const Rational& s, const Coordinates& a);
bool is_zero(const Coordinates& a);

std::string to_string(const Coordinates& a);

}  // namespace barycalc
