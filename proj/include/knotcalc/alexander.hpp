#pragma once

#include "knotcalc/diagram.hpp"
#include "knotcalc/laurent.hpp"

namespace knotcalc {

// Scales by plus or minus a power of t so the lowest exponent is 0 and the
// constant term is positive; Alexander polynomials are compared in this form.
LaurentPolynomial canonical_alexander_form(const LaurentPolynomial& p);

// Alexander polynomial of a knot diagram via the crossing relation matrix of
// the arc generators, with one row and one column removed.
LaurentPolynomial alexander_from_diagram(const PlanarDiagram& d);

// Alexander polynomial of a knot presented as a braid closure, via the
// reduced Burau representation:
//   delta * (1 + t + ... + t^(n-1)) = unit * det(I - B(word)).
LaurentPolynomial alexander_from_braid(const BraidWord& b);

// Closed form for torus knots: (t^(pq)-1)(t-1) / ((t^p-1)(t^q-1)) with
// p, q coprime; mirror-invariant, so only |p| matters.
LaurentPolynomial torus_alexander(int p, int q);

// Twist knots with n full twists and a clasp: n - (2n+1)t + n t^2.
// n = 1 is the figure-eight knot.
LaurentPolynomial twist_alexander(int n);

// Product of two canonical-form polynomials, recanonicalized.
LaurentPolynomial multiply_canonical(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Degree-1 coefficient of a canonical-form polynomial whose constant term is
// 1 (so the value is well-defined); rejects other inputs.
Integer coefficient_of_t(const LaurentPolynomial& canonical);

enum class LSpaceObstruction { Obstructed, NotObstructed };

// Coefficient test obstructing L-space surgeries: a knot whose Alexander
// polynomial has a coefficient of magnitude 2 or more admits none. The strict
// mode applies the sharper classical constraint that the nonzero coefficients
// must be +-1 and strictly alternate in sign.
LSpaceObstruction lspace_coefficient_obstruction(const LaurentPolynomial& canonical,
                                                 bool strict = false);

// The unit multiple with exponents centered around 0 (even span required);
// an alternative rendering of the same canonical class.
LaurentPolynomial symmetric_representative(const LaurentPolynomial& canonical);

// Leading and trailing coefficients are both units.
bool monic(const LaurentPolynomial& p);

// Half the exponent span; for fibered knots this is the fiber genus, in
// general a lower bound for the genus.
int alexander_genus_bound(const LaurentPolynomial& p);

// Necessary condition for a knot to have period p with axis linking number
// lambda: delta(K) is congruent mod p to
//   unit * delta(factor)^p * (1 + t + ... + t^(lambda-1))^(p-1).
bool murasugi_congruence(const LaurentPolynomial& whole, const LaurentPolynomial& factor, int p,
                         int lambda);

}  // namespace knotcalc
