#include "knotcalc/rational.hpp"

namespace knotcalc {

Integer gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw invariant_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw invariant_error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Integer Rational::floor() const {
    Integer q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

Integer Rational::ceil() const {
    Integer q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) ++q;
    return q;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rational Rational::parse(const std::string& text) {
    auto bad = [&] { throw parse_error("malformed rational: '" + text + "'"); };
    auto digits = [&](const std::string& part) {
        if (part.empty()) bad();
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(part[i]))) bad();
        return Integer(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(digits(text));
    Integer n = digits(text.substr(0, slash));
    Integer d = digits(text.substr(slash + 1));
    if (d == 0) throw parse_error("rational with zero denominator: '" + text + "'");
    return Rational(n, d);
}

}  // namespace knotcalc
