#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fermat/errors.hpp"

namespace fermat {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Thin value wrapper around boost's cpp_rational,
// which keeps the canonical form (positive denominator, gcd 1) after every
// operation.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}  // NOLINT: implicit by design, matches integer literals in formulas
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        value_ = boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_negative() const { return value_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        return Rational(1) /= *this;
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

  private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_rational value_;
};

}  // namespace fermat
