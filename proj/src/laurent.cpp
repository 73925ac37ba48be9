#include "knotcalc/laurent.hpp"

#include <cctype>
#include <sstream>

#include "knotcalc/errors.hpp"

namespace knotcalc {

void LaurentPolynomial::set(int exp, Integer c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = std::move(c);
}

LaurentPolynomial LaurentPolynomial::constant(Integer c) { return monomial(0, std::move(c)); }

LaurentPolynomial LaurentPolynomial::monomial(int exp, Integer coeff) {
    LaurentPolynomial p;
    p.set(exp, std::move(coeff));
    return p;
}

int LaurentPolynomial::min_exp() const {
    if (is_zero()) throw invariant_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPolynomial::max_exp() const {
    if (is_zero()) throw invariant_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Integer LaurentPolynomial::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw invariant_error("division by zero polynomial");
    LaurentPolynomial rem = *this;
    LaurentPolynomial quot;
    const int d_max = divisor.max_exp();
    const Integer& d_lead = divisor.coeffs_.rbegin()->second;
    // If exact, quotient exponents never drop below this.
    const int q_min = is_zero() ? 0 : min_exp() - divisor.min_exp();
    while (!rem.is_zero()) {
        int e = rem.max_exp() - d_max;
        Integer c = rem.coeffs_.rbegin()->second;
        if (e < q_min || c % d_lead != 0)
            throw invariant_error("polynomial division is not exact");
        LaurentPolynomial term = monomial(e, c / d_lead);
        quot = quot + term;
        rem = rem - term * divisor;
    }
    return quot;
}

LaurentPolynomial LaurentPolynomial::mod(const Integer& p) const {
    if (p <= 0) throw invariant_error("modulus must be positive");
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) {
        Integer m = c % p;
        if (m < 0) m += p;
        r.set(e, m);
    }
    return r;
}

Integer LaurentPolynomial::evaluate(const Integer& t) const {
    Integer acc = 0;
    for (const auto& [e, c] : coeffs_) {
        if (e < 0) throw invariant_error("evaluate requires nonnegative exponents");
        Integer pw = 1;
        for (int i = 0; i < e; ++i) pw *= t;
        acc += c * pw;
    }
    return acc;
}

std::string LaurentPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Integer a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str();
            out << "t";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

namespace {

struct PolyScanner {
    const std::string& s;
    size_t i = 0;
    explicit PolyScanner(const std::string& text) : s(text) {}
    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Integer integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw parse_error("expected integer in polynomial: '" + s + "'");
        return Integer(s.substr(start, i - start));
    }
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
    PolyScanner sc(text);
    LaurentPolynomial result;
    if (sc.done()) throw parse_error("empty polynomial");
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.eat('+')) {
            sign = 1;
        } else if (sc.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw parse_error("expected '+' or '-' between polynomial terms: '" + text + "'");
        }
        sc.skip_ws();
        Integer coeff = 1;
        bool saw_coeff = false;
        if (sc.i < sc.s.size() && isdigit(static_cast<unsigned char>(sc.s[sc.i]))) {
            coeff = sc.integer();
            saw_coeff = true;
        }
        int exp = 0;
        sc.skip_ws();
        if (sc.i < sc.s.size() && sc.s[sc.i] == 't') {
            ++sc.i;
            exp = 1;
            if (sc.eat('^')) {
                Integer e = sc.integer();
                exp = static_cast<int>(e);
            }
        } else if (!saw_coeff) {
            throw parse_error("expected polynomial term: '" + text + "'");
        }
        result = result + monomial(exp, sign * coeff);
        first = false;
    }
    return result;
}

}  // namespace knotcalc
