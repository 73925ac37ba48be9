#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "knotcalc/errors.hpp"

namespace knotcalc {

using Integer = boost::multiprecision::cpp_int;

Integer gcd(Integer a, Integer b);

// Exact rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    Rational(int n) : num_(n), den_(1) {}                 // NOLINT
    Rational(Integer n, Integer d);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Integer floor() const;
    Integer ceil() const;

    // "m" for integers, "m/n" otherwise.
    std::string str() const;
    static Rational parse(const std::string& text);

private:
    Integer num_;
    Integer den_;
};

}  // namespace knotcalc
