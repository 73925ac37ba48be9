#include "knotcalc/periodic.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PeriodicResult construct(const AnnularTangle& t, int period) {
    if (period < 1) throw invariant_error("period must be at least 1");
    AnnularClosure one = annular_closure(t);
    if (one.diagram.component_count() != 1)
        throw invariant_error("annular closure of the tangle must be a knot");
    int winding = one.axis_winding;
    if (std::gcd(period, std::abs(winding)) != 1)
        throw invariant_error("period must be coprime to the axis winding");

    AnnularClosure closed = annular_closure(tangle_power(t, period));
    PeriodicResult r;
    r.diagram = closed.diagram;
    r.period = period;
    r.factor = one.diagram;
    r.axis_winding = winding;
    // The gcd condition predicts a knot; confirm on the actual output.
    if (r.diagram.component_count() != 1)
        throw invariant_error("periodic closure is not a single component");
    if (r.diagram.crossing_count() != period * t.crossing_count())
        throw invariant_error("periodic closure has the wrong crossing count");

    Certificate build;
    build.rule_id = "periodic.construct";
    build.statement = "the output knot has period " + std::to_string(period) +
                      " with the factor knot as quotient and axis winding " +
                      std::to_string(winding);
    build.citation = "cyclic symmetry of iterated tangle closures";
    build.hypotheses = {
        {"gcd(period, axis winding) = 1", true},
        {"the closure of a single tangle copy is a knot", true},
        {"the periodic closure is a single component", true},
    };
    r.certificates.push_back(build);

    if (is_prime(period) && winding != 0 && r.diagram.crossing_count() <= 30) {
        LaurentPolynomial whole = alexander_from_diagram(r.diagram);
        LaurentPolynomial factor = alexander_from_diagram(r.factor);
        if (!murasugi_congruence(whole, factor, period, std::abs(winding)))
            throw invariant_error("periodicity congruence failed on the constructed knot");
        Certificate mu;
        mu.rule_id = "periodic.congruence";
        mu.statement = "the Alexander polynomials of the periodic knot and its factor satisfy "
                       "the mod-" + std::to_string(period) + " periodicity congruence";
        mu.citation = "Murasugi: Alexander polynomial congruence for periodic knots";
        mu.hypotheses = {{"congruence verified by direct computation", true}};
        r.certificates.push_back(mu);
    }
    return r;
}

std::pair<SlopeSet, Certificate> inferred_slo(const SlopeSet& factor_slopes, int period) {
    if (period < 1) throw invariant_error("period must be at least 1");
    Certificate c;
    c.rule_id = "periodic.slope-lift";
    c.statement = "multiplying each left-orderable surgery slope of the factor knot by " +
                  std::to_string(period) + " gives a left-orderable surgery slope of the "
                  "periodic knot";
    c.citation = "lifting left orders across cyclic branched covers of surgered manifolds";
    c.hypotheses = {{"the input set consists of left-orderable surgery slopes of the factor",
                     true}};
    return {factor_slopes.scale(Rational(period)), c};
}

std::optional<Certificate> sl_empty_certificate(const LaurentPolynomial& factor_alexander) {
    if (monic(factor_alexander)) return std::nullopt;
    Certificate c;
    c.rule_id = "periodic.sl-empty";
    c.statement = "no surgery on the periodic knot yields an L-space";
    c.citation = "Ni: a knot with an L-space surgery is fibered, and fibered knots have monic "
                 "Alexander polynomial";
    c.hypotheses = {
        {"the factor knot's Alexander polynomial is not monic", true},
        {"an L-space surgery on the periodic knot would force the factor to be fibered", true},
    };
    return c;
}

std::optional<Certificate> sl_empty_by_fiber_assertion(bool asserted) {
    if (!asserted) return std::nullopt;
    Certificate c;
    c.rule_id = "periodic.sl-empty-asserted";
    c.statement = "no surgery on the periodic knot yields an L-space";
    c.citation = "fiber surfaces of a knot with an L-space surgery meet the branching axis "
                 "minimally, contradicting the asserted excess intersection";
    c.hypotheses = {
        {"every fiber surface of the factor knot meets the axis in more points than its "
         "linking number with the axis",
         false},
    };
    return c;
}

int genus_bound(int factor_bound, int period) {
    if (period < 1) throw invariant_error("period must be at least 1");
    if (factor_bound < 0) throw invariant_error("genus bound must be nonnegative");
    return period * factor_bound;
}

std::optional<Certificate> hyperbolicity_certificate(const PlanarDiagram& link,
                                                     int axis_component, int period) {
    if (link.component_count() != 2)
        throw invariant_error("hyperbolicity certificate needs a two-component diagram");
    if (axis_component < 0 || axis_component > 1)
        throw invariant_error("axis component label out of range");
    if (period <= 2) return std::nullopt;

    DiagramPredicates p = diagram_predicates(link);
    if (!(p.nonsplit && p.prime_diagram && p.reduced && p.alternating)) return std::nullopt;
    if (self_crossing_count(link, axis_component) != 0) return std::nullopt;

    PlanarDiagram knot_part = extract_component(link, 1 - axis_component);
    LaurentPolynomial delta = alexander_from_diagram(knot_part);
    if (delta == LaurentPolynomial::constant(1)) return std::nullopt;

    Certificate c;
    c.rule_id = "periodic.hyperbolic";
    c.statement = "the period-" + std::to_string(period) +
                  " knot branched over this axis has hyperbolic complement, and every "
                  "surgery on it is hyperbolic";
    c.citation = "Menasco: a non-split prime alternating link other than a closed 2-braid is "
                 "hyperbolic";
    c.hypotheses = {
        {"the factor-plus-axis diagram is reduced, alternating, prime and non-split", true},
        {"the axis component has no self-crossings", true},
        {"the factor component has nontrivial Alexander polynomial", true},
        {"the period exceeds 2", true},
    };
    return c;
}

std::vector<Certificate> alternating_periodic_facts(const PlanarDiagram& factor,
                                                    bool perpendicular_axis, int period) {
    if (period < 2) throw invariant_error("period must be at least 2");
    if (factor.component_count() != 1)
        throw invariant_error("factor diagram must be a knot");
    DiagramPredicates p = diagram_predicates(factor);
    if (!p.alternating) throw invariant_error("factor diagram is not alternating");
    std::vector<Certificate> out;
    if (!perpendicular_axis) return out;
    if (!(p.reduced && p.prime_diagram && p.nonsplit)) return out;

    Hypothesis axis{"the axis is a perpendicular circle for the factor diagram", false};
    Hypothesis shape{"the factor diagram is reduced, alternating, prime and non-split", true};

    Certificate alt;
    alt.rule_id = "periodic.alternating";
    alt.statement = "the periodic knot admits a reduced alternating diagram";
    alt.citation = "cyclic covers of reduced alternating diagrams along a perpendicular axis "
                   "stay reduced alternating";
    alt.hypotheses = {shape, axis};
    out.push_back(alt);

    std::string family = "nonzero integers n";
    if (p.positive) family = "integers n > 0";
    if (p.negative) family = "integers n < 0";
    Certificate fam;
    fam.rule_id = "periodic.slope-family";
    fam.statement = "for all " + family + ", surgery with slope " + std::to_string(period) +
                    "/n on the periodic knot yields a manifold with left-orderable "
                    "fundamental group";
    fam.citation = "order lifting combined with surgery formulas for periodic alternating knots";
    fam.hypotheses = {shape, axis};
    out.push_back(fam);

    LaurentPolynomial delta = alexander_from_diagram(factor);
    int q = delta.is_zero() ? 1 : delta.span() + 1;
    bool torus_like = (q == 1) || (q % 2 == 1 && delta == torus_alexander(q, 2));
    if (!torus_like) {
        Certificate nol;
        nol.rule_id = "periodic.sl-empty-alternating";
        nol.statement = "no surgery on the periodic knot yields an L-space";
        nol.citation = "Ozsváth–Szabó: an alternating knot with an L-space surgery is a "
                       "(q,2) torus knot";
        nol.hypotheses = {
            shape,
            axis,
            {"the factor's Alexander polynomial differs from that of every (q,2) torus knot",
             true},
        };
        out.push_back(nol);
    }
    return out;
}

}  // namespace knotcalc
