#pragma once

#include <map>
#include <string>

#include "knotcalc/rational.hpp"

namespace knotcalc {

// Laurent polynomial over the integers, sparse, exponents may be negative.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial constant(Integer c);
    static LaurentPolynomial monomial(int exp, Integer coeff);

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const;  // invariant: nonzero polynomial
    int max_exp() const;
    int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
    Integer coeff(int exp) const;
    const std::map<int, Integer>& terms() const { return coeffs_; }

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    LaurentPolynomial shifted(int k) const;  // multiply by t^k
    // Exact division; throws invariant_error if the quotient is not a Laurent
    // polynomial over the integers.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;
    // Coefficients reduced to representatives in [0, p).
    LaurentPolynomial mod(const Integer& p) const;
    Integer evaluate(const Integer& t) const;  // exponents must be >= 0

    // Ascending exponents, explicit signs: "1 - t + t^2", "-t^-1 + 3 - t".
    std::string str() const;
    static LaurentPolynomial parse(const std::string& text);

private:
    void set(int exp, Integer c);
    std::map<int, Integer> coeffs_;  // nonzero coefficients only
};

}  // namespace knotcalc
