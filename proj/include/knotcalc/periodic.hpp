#pragma once

#include <optional>
#include <vector>

#include "knotcalc/alexander.hpp"
#include "knotcalc/certificate.hpp"
#include "knotcalc/diagram.hpp"
#include "knotcalc/slope_set.hpp"
#include "knotcalc/tangle.hpp"

namespace knotcalc {

// A periodic knot assembled from p copies of an annular tangle, together
// with the quotient data the deduction rules consume.
struct PeriodicResult {
    PlanarDiagram diagram;        // the periodic knot itself
    int period = 1;
    PlanarDiagram factor;         // annular closure of one tangle copy
    int axis_winding = 0;         // linking number of the factor with the axis
    std::vector<Certificate> certificates;
};

// Build the p-periodic knot: glue p copies of `t` end to end around the
// annulus and close up.  Requires the one-copy closure to be a knot and
// gcd(p, winding) = 1; the single-component conclusion is verified directly
// on the output rather than trusted.  For prime p and small diagrams the
// periodicity congruence between the two Alexander polynomials is checked as
// a self-test and recorded as a certificate.
PeriodicResult construct(const AnnularTangle& t, int period);

// Left-orderable surgery slopes of the factor knot lift to p-times slopes of
// the periodic knot: returns scale(factor_slopes, p) with its certificate.
std::pair<SlopeSet, Certificate> inferred_slo(const SlopeSet& factor_slopes, int period);

// If the factor's Alexander polynomial is not monic, the factor is not
// fibered and the periodic knot admits no L-space surgery.  Returns the
// certificate, or nothing when the polynomial is monic.
std::optional<Certificate> sl_empty_certificate(const LaurentPolynomial& factor_alexander);

// Same conclusion from the caller-asserted geometric hypothesis that every
// fiber surface of the factor meets the axis in more points than their
// linking number; the certificate's hypothesis is marked unverified.
std::optional<Certificate> sl_empty_by_fiber_assertion(bool asserted);

// Genus lower bound for the periodic knot from one for the factor.
int genus_bound(int factor_bound, int period);

// Certify hyperbolicity of the periodic knot from a two-component diagram of
// factor-plus-axis: needs period > 2, a reduced alternating prime non-split
// diagram, an axis without self-crossings, and a factor component with
// nontrivial Alexander polynomial.  Returns nothing when a condition fails;
// errors if the diagram does not have two components or the axis label is
// out of range.
std::optional<Certificate> hyperbolicity_certificate(const PlanarDiagram& link,
                                                     int axis_component, int period);

// Deductions available when the factor diagram is reduced, alternating,
// prime and non-split and the axis is asserted to be a perpendicular circle:
// (a) the periodic knot is alternating, (b) the slope family p/n consists of
// left-orderable surgery slopes (one sign half when the factor is positive
// or negative), and (c) no surgery is an L-space when the factor's Alexander
// polynomial differs from that of every (q,2) torus knot.  Returns the
// certificates that apply; empty when the perpendicularity assertion is
// withheld or the reduced/prime/non-split checks fail.  A non-alternating
// factor is rejected outright.
std::vector<Certificate> alternating_periodic_facts(const PlanarDiagram& factor,
                                                    bool perpendicular_axis, int period);

}  // namespace knotcalc
