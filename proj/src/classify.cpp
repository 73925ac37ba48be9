#include "knotcalc/classify.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "knotcalc/errors.hpp"
#include "knotcalc/periodic.hpp"

namespace knotcalc {

namespace {

Certificate cert(std::string rule, std::string statement, std::string citation,
                 std::vector<Hypothesis> hyps = {}) {
    Certificate c;
    c.rule_id = std::move(rule);
    c.statement = std::move(statement);
    c.citation = std::move(citation);
    c.hypotheses = std::move(hyps);
    return c;
}

void append(std::vector<Certificate>& dst, const std::vector<Certificate>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

SlopeSet rationals_without_zero() {
    return SlopeSet::point(Rational(0)).complement();
}

ExprPtr node(KnotExpr e) { return std::make_shared<const KnotExpr>(std::move(e)); }

// Effective torus parameters of an expression that is a torus knot under any
// number of mirrors; chirality flips with each mirror.
std::optional<std::pair<int, int>> torus_core(const ExprPtr& e) {
    bool flip = false;
    const KnotExpr* cur = e.get();
    while (cur && cur->kind == KnotExpr::Kind::Mirror) {
        flip = !flip;
        cur = cur->a.get();
    }
    if (!cur || cur->kind != KnotExpr::Kind::Torus) return std::nullopt;
    return std::make_pair(flip ? -cur->p : cur->p, cur->q);
}

// Knots with at most 4 crossings are the unknot, the trefoils and the
// figure-eight; the Alexander polynomial decides which, and for the trefoil
// the diagram writhe decides the chirality (minimal diagrams have writhe
// +-3 and the only 4-crossing trefoil diagrams add a single kink).
ExprPtr recognize_small_knot(const PlanarDiagram& d, const LaurentPolynomial& delta) {
    if (d.component_count() != 1 || d.crossing_count() > 4) return nullptr;
    if (delta == LaurentPolynomial::constant(1)) return make_trivial();
    if (d.crossing_count() >= 3 && delta == torus_alexander(3, 2))
        return make_torus(d.writhe() > 0 ? 3 : -3, 2);
    if (d.crossing_count() == 4 && delta == twist_alexander(1)) return make_figure_eight();
    return nullptr;
}

Classification classify_impl(const ExprPtr& e, const ClassifyOptions& opt);

// Shared tail for nodes whose only handle is a diagram-computed polynomial.
Classification classify_from_diagram(const PlanarDiagram& d, const LaurentPolynomial& delta,
                                     const ClassifyOptions& opt) {
    if (ExprPtr rec = recognize_small_knot(d, delta)) {
        Classification out = classify_impl(rec, opt);
        out.certificates.insert(
            out.certificates.begin(),
            cert("diagram.recognized",
                 "a knot diagram with at most 4 crossings presents the unknot, a trefoil or "
                 "the figure-eight knot, and the Alexander polynomial together with the "
                 "writhe identifies which",
                 "classification of knots with at most 4 crossings",
                 {{"Alexander polynomial and writhe computed from the diagram", true}}));
        return out;
    }
    Classification c;
    c.alexander = delta;
    c.genus_lower = alexander_genus_bound(delta);
    if (c.genus_lower > 0)
        c.certificates.push_back(cert(
            "alexander.genus", "half the span of the Alexander polynomial bounds the genus "
                               "from below",
            "Seifert: the Alexander polynomial of a genus-g knot has span at most 2g"));
    if (!monic(delta)) {
        c.fibered = FiberedStatus::No;
        c.certificates.push_back(
            cert("alexander.nonfibered",
                 "the Alexander polynomial is not monic, so the knot is not fibered",
                 "Burde–Zieschang: fibered knots have monic Alexander polynomial"));
    }
    return c;
}

void set_sl_empty(Classification& c) {
    if (c.sl_status == SlStatus::Unknown) c.sl_status = SlStatus::Empty;
}

// Coefficient obstruction on whatever polynomial the node established.
void apply_coefficient_obstruction(Classification& c, const ClassifyOptions& opt) {
    if (!c.alexander || c.sl_status == SlStatus::Exact) return;
    if (lspace_coefficient_obstruction(*c.alexander, opt.strict_lspace_test) !=
        LSpaceObstruction::Obstructed)
        return;
    std::string how = opt.strict_lspace_test
                          ? "its nonzero coefficients fail to alternate through +-1"
                          : "it has a coefficient of magnitude at least 2";
    c.certificates.push_back(
        cert("alexander.sl-empty",
             "the Alexander polynomial obstructs L-space surgeries: " + how +
                 ", so no surgery on this knot is an L-space",
             "Ozsváth–Szabó: the Alexander polynomial of a knot with an L-space surgery "
             "has alternating coefficients +-1"));
    set_sl_empty(c);
}

// Promote a full lower bound; Q has no proper superset among slope sets.
void apply_promotion(Classification& c) {
    if (c.slo_exact || !c.slo_lower.is_all()) return;
    c.slo_exact = SlopeSet::all();
    c.certificates.push_back(cert(
        "promotion.full",
        "the lower bound already contains every rational slope, so the left-orderable "
        "surgery set is exactly the rationals",
        "a lower bound equal to the whole ambient set is exact"));
}

// Every knot has 0 as a left-orderable surgery slope.
void apply_zero_slope(Classification& c) {
    if (c.slo_exact) {
        c.slo_lower = *c.slo_exact;
        return;
    }
    if (c.slo_lower.member(Rational(0))) return;
    c.slo_lower = c.slo_lower.unite(SlopeSet::point(Rational(0)));
    c.certificates.push_back(
        cert("zero.slope", "0-surgery always yields a left-orderable fundamental group",
             "Boyer–Rolfsen–Wiest: irreducible 3-manifolds with positive first Betti "
             "number have left-orderable fundamental group"));
}

// Consistency validators; failures are warnings, never repairs.
void apply_consistency(Classification& c) {
    if (c.sl_status != SlStatus::Exact || !c.sl || c.sl->is_empty()) return;
    if (!c.genus_exact || *c.genus_exact < 1) return;
    if (!lspace_structure_check(*c.sl, *c.genus_exact))
        c.certificates.push_back(cert(
            "consistency.lspace-interval",
            "WARNING: the exact L-space surgery set is not of the expected half-line shape "
            "for the known genus; this indicates an implementation bug",
            "L-space surgery sets of nontrivial knots are [2g-1, inf) up to mirroring"));
    if (c.sl->reciprocal_integer_member()) {
        bool trefoil = c.alexander && *c.alexander == torus_alexander(3, 2);
        if (!trefoil)
            c.certificates.push_back(cert(
                "consistency.small-lspace",
                "WARNING: a slope 1/n lies in the exact L-space surgery set of a knot that "
                "is not a trefoil; this indicates an implementation bug",
                "only the trefoils admit L-space surgeries of slope 1/n"));
    }
}

Classification classify_trivial() {
    Classification c;
    c.slo_exact = SlopeSet::point(Rational(0));
    c.slo_lower = *c.slo_exact;
    c.sl_status = SlStatus::Exact;
    c.sl = rationals_without_zero();
    c.fibered = FiberedStatus::Yes;
    c.genus_exact = 0;
    c.alexander = LaurentPolynomial::constant(1);
    c.certificates.push_back(
        cert("trivial.catalog",
             "the unknot has left-orderable surgery set {0}, and every nonzero surgery "
             "is an L-space",
             "0-surgery on the unknot is S^2 x S^1; nonzero surgeries are lens spaces"));
    return c;
}

Classification classify_torus(int p, int q) {
    TorusSlopes ts = catalog_torus(p, q);
    Classification c;
    c.slo_exact = ts.slo;
    c.slo_lower = ts.slo;
    c.sl_status = SlStatus::Exact;
    c.sl = ts.sl;
    c.fibered = FiberedStatus::Yes;
    int g = (std::abs(p) - 1) * (q - 1) / 2;
    c.genus_lower = g;
    c.genus_exact = g;
    c.alexander = torus_alexander(p, q);
    c.certificates.push_back(
        cert("torus.catalog",
             "the (" + std::to_string(p) + "," + std::to_string(q) +
                 ") torus knot has left-orderable surgery set " + ts.slo.str() +
                 " and L-space surgery set " + ts.sl.str(),
             "Moser's classification of torus-knot surgeries with the left-orderability "
             "of Seifert-fibered spaces"));
    c.certificates.push_back(cert("torus.fibered",
                                  "torus knots are fibered of genus (|p|-1)(q-1)/2",
                                  "torus-knot exteriors fiber over the circle"));
    return c;
}

Classification classify_twist(int n) {
    SpecialSlopes sp = catalog_twist(n);
    Classification c;
    c.slo_lower = sp.slo_lower;
    c.sl_status = SlStatus::Empty;
    c.fibered = FiberedStatus::No;
    c.genus_lower = 1;
    c.genus_exact = 1;
    c.alexander = twist_alexander(n);
    c.certificates.push_back(cert(
        "twist.slopes",
        "every slope in " + sp.slo_lower.str() +
            " is a left-orderable surgery slope of the " + std::to_string(n) +
            "-twist knot",
        "left-orderable surgery intervals for twisted doubles of the unknot"));
    c.certificates.push_back(
        cert("twist.nonfibered",
             "the Alexander polynomial " + c.alexander->str() +
                 " is not monic, so the knot is not fibered",
             "Burde–Zieschang: fibered knots have monic Alexander polynomial"));
    c.certificates.push_back(
        cert("twist.sl-empty", "a knot that is not fibered admits no L-space surgery",
             "Ni: knots with an L-space surgery are fibered"));
    return c;
}

Classification classify_figure_eight() {
    SpecialSlopes sp = catalog_special(SpecialKnot::FigureEight);
    Classification c;
    c.slo_lower = sp.slo_lower;
    c.slo_contains_all_integers = sp.slo_contains_all_integers;
    c.sl_status = SlStatus::Empty;
    c.fibered = FiberedStatus::Yes;
    c.genus_lower = 1;
    c.genus_exact = 1;
    c.alexander = twist_alexander(1);
    c.certificates.push_back(
        cert("fig8.slopes",
             "every slope in " + sp.slo_lower.str() +
                 " and every integer slope is a left-orderable surgery slope of the "
                 "figure-eight knot",
             "left-orderable surgeries on the figure-eight knot"));
    c.certificates.push_back(cert("fig8.fibered",
                                  "the figure-eight knot is fibered of genus 1",
                                  "the figure-eight knot is a fibered twisted double"));
    c.certificates.push_back(
        cert("fig8.sl-empty",
             "the Alexander polynomial 1 - 3t + t^2 has a coefficient of magnitude 3, "
             "so no surgery is an L-space",
             "Ozsváth–Szabó: the Alexander polynomial of a knot with an L-space surgery "
             "has coefficients +-1"));
    return c;
}

Classification classify_sum(const ExprPtr& e, const ClassifyOptions& opt) {
    Classification ca = classify_impl(e->a, opt);
    Classification cb = classify_impl(e->b, opt);
    Classification c;
    c.certificates = ca.certificates;
    append(c.certificates, cb.certificates);

    c.slo_lower = ca.slo_lower.unite(cb.slo_lower);
    c.slo_contains_all_integers = ca.slo_contains_all_integers || cb.slo_contains_all_integers;
    c.certificates.push_back(
        cert("sum.slopes",
             "left-orderable surgery slopes of either summand remain left-orderable "
             "surgery slopes of the connected sum",
             "connected-sum inheritance of left-orderable surgery slopes"));

    if (ca.fibered == FiberedStatus::Yes && cb.fibered == FiberedStatus::Yes) {
        c.fibered = FiberedStatus::Yes;
        c.certificates.push_back(cert("sum.fibered",
                                      "a connected sum of fibered knots is fibered",
                                      "fibrations glue across the summing sphere"));
    } else if (ca.fibered == FiberedStatus::No || cb.fibered == FiberedStatus::No) {
        c.fibered = FiberedStatus::No;
        c.certificates.push_back(
            cert("sum.nonfibered",
                 "a connected sum with a non-fibered summand is not fibered",
                 "fiberedness of a connected sum implies fiberedness of each summand"));
    }

    c.genus_lower = ca.genus_lower + cb.genus_lower;
    if (ca.genus_exact && cb.genus_exact) c.genus_exact = *ca.genus_exact + *cb.genus_exact;

    if (ca.alexander && cb.alexander) {
        c.alexander = multiply_canonical(*ca.alexander, *cb.alexander);
        c.certificates.push_back(
            cert("sum.alexander",
                 "Alexander polynomials multiply under connected sum",
                 "multiplicativity of the Alexander polynomial"));
    }

    if (c.fibered == FiberedStatus::No) {
        c.certificates.push_back(
            cert("sum.sl-empty", "the connected sum is not fibered, so no surgery on it "
                                 "is an L-space",
                 "Ni: knots with an L-space surgery are fibered"));
        set_sl_empty(c);
    }
    apply_coefficient_obstruction(c, opt);

    // mirrored-pair torus sums: both half-lines plus the t-coefficient claim
    auto ta = torus_core(e->a), tb = torus_core(e->b);
    if (ta && tb && ((ta->first < 0) != (tb->first < 0))) {
        c.certificates.push_back(cert(
            "pair.all-rationals",
            "a connected sum of a negative and a positive torus knot has every rational "
            "number as a left-orderable surgery slope",
            "the two catalog half-lines overlap and cover the rationals",
            {{"each summand's left-orderable surgery set is a catalog half-line", true}}));
        if (c.alexander) {
            Integer coeff = coefficient_of_t(*c.alexander);
            if (coeff == -2) {
                c.certificates.push_back(cert(
                    "pair.t-coefficient",
                    "the connected sum's Alexander polynomial has constant term 1 and "
                    "t-coefficient -2, which obstructs every L-space surgery",
                    "each torus summand's Alexander polynomial starts 1 - t + ...",
                    {{"t-coefficient computed exactly", true}}));
                set_sl_empty(c);
            } else {
                c.certificates.push_back(cert(
                    "consistency.pair-coefficient",
                    "WARNING: the expected t-coefficient -2 of the mirrored torus pair "
                    "came out as " + coeff.str() + "; this indicates an implementation bug",
                    "each torus summand's Alexander polynomial starts 1 - t + ..."));
            }
        }
    }
    apply_promotion(c);
    return c;
}

Classification classify_repeated_sum(const ExprPtr& e, const ClassifyOptions& opt) {
    if (e->p == 1) return classify_impl(e->a, opt);
    Classification ca = classify_impl(e->a, opt);
    Classification c;
    c.certificates = ca.certificates;
    c.slo_lower = ca.slo_lower.scale(Rational(e->p));
    c.certificates.push_back(
        cert("nsum.slopes",
             "left-orderable surgery slopes of the summand, multiplied by " +
                 std::to_string(e->p) + ", are left-orderable surgery slopes of the " +
                 std::to_string(e->p) + "-fold connected sum",
             "iterated connected-sum slope scaling"));

    c.fibered = ca.fibered;
    if (c.fibered == FiberedStatus::No)
        c.certificates.push_back(
            cert("nsum.nonfibered",
                 "a connected sum with a non-fibered summand is not fibered",
                 "fiberedness of a connected sum implies fiberedness of each summand"));

    c.genus_lower = e->p * ca.genus_lower;
    if (ca.genus_exact) c.genus_exact = e->p * *ca.genus_exact;

    if (ca.alexander) {
        LaurentPolynomial prod = LaurentPolynomial::constant(1);
        for (int i = 0; i < e->p; ++i) prod = prod * *ca.alexander;
        c.alexander = canonical_alexander_form(prod);
    }

    if (c.fibered == FiberedStatus::No) {
        c.certificates.push_back(
            cert("nsum.sl-empty", "the repeated sum is not fibered, so no surgery on it "
                                  "is an L-space",
                 "Ni: knots with an L-space surgery are fibered"));
        set_sl_empty(c);
    }
    apply_coefficient_obstruction(c, opt);
    apply_promotion(c);
    return c;
}

Classification classify_periodic(const ExprPtr& e, const ClassifyOptions& opt) {
    PeriodicResult pr = construct(*e->tangle, e->p);
    Classification c;
    c.certificates = pr.certificates;

    LaurentPolynomial delta_factor = alexander_from_diagram(pr.factor);
    std::optional<LaurentPolynomial> delta_kp;
    if (pr.diagram.crossing_count() <= 60)
        delta_kp = alexander_from_diagram(pr.diagram);

    // A caller claim about the factor is always cross-checked against the
    // factor polynomial, whether or not it ends up being used.
    std::optional<Classification> claimed;
    if (e->claimed_factor) {
        claimed = classify_impl(e->claimed_factor, opt);
        if (claimed->alexander && *claimed->alexander != delta_factor)
            throw invariant_error(
                "the claimed factor's Alexander polynomial does not match the factor "
                "diagram");
    }

    // identify the factor knot: small diagrams computationally, otherwise the
    // cross-checked caller claim
    std::optional<Classification> cf;
    if (ExprPtr rec = recognize_small_knot(pr.factor, delta_factor)) {
        cf = classify_impl(rec, opt);
        c.certificates.push_back(cert(
            "periodic.factor-recognized",
            "the factor diagram has at most 4 crossings and is identified by its "
            "Alexander polynomial and writhe",
            "classification of knots with at most 4 crossings",
            {{"Alexander polynomial and writhe computed from the factor diagram", true}}));
    } else if (claimed) {
        bool checked = claimed->alexander.has_value();
        cf = std::move(claimed);
        c.certificates.push_back(
            cert("periodic.factor-asserted",
                 "the factor diagram is taken to present the claimed knot",
                 "caller identification of the quotient knot",
                 {{"the factor diagram presents the claimed knot", false},
                  {"the Alexander polynomials of the diagram and the claim agree",
                   checked}}));
    }

    if (cf) {
        append(c.certificates, cf->certificates);
        auto [lifted, lift_cert] = inferred_slo(cf->slo_lower, e->p);
        c.slo_lower = lifted;
        c.certificates.push_back(lift_cert);
        if (cf->genus_lower > 0) {
            c.genus_lower = genus_bound(cf->genus_lower, e->p);
            c.certificates.push_back(cert(
                "periodic.genus",
                "the periodic knot's genus is at least the period times the factor's "
                "genus bound",
                "equivariant Seifert surfaces descend to Seifert surfaces of the factor"));
        }
    }

    if (delta_kp) {
        c.alexander = delta_kp;
        int span_bound = alexander_genus_bound(*delta_kp);
        if (span_bound > c.genus_lower) {
            c.genus_lower = span_bound;
            c.certificates.push_back(cert(
                "alexander.genus", "half the span of the Alexander polynomial bounds the "
                                   "genus from below",
                "Seifert: the Alexander polynomial of a genus-g knot has span at most 2g"));
        }
        if (!monic(*delta_kp)) {
            c.fibered = FiberedStatus::No;
            c.certificates.push_back(
                cert("alexander.nonfibered",
                     "the Alexander polynomial is not monic, so the knot is not fibered",
                     "Burde–Zieschang: fibered knots have monic Alexander polynomial"));
        }
    }

    if (auto mc = sl_empty_certificate(delta_factor)) {
        c.certificates.push_back(*mc);
        set_sl_empty(c);
    }
    if (auto fc = sl_empty_by_fiber_assertion(e->assertions.fiber_excess)) {
        c.certificates.push_back(*fc);
        set_sl_empty(c);
    }
    apply_coefficient_obstruction(c, opt);

    if (e->assertions.perpendicular && diagram_predicates(pr.factor).alternating) {
        std::vector<Certificate> facts = alternating_periodic_facts(pr.factor, true, e->p);
        for (const Certificate& f : facts) {
            if (f.rule_id == "periodic.sl-empty-alternating") set_sl_empty(c);
            c.certificates.push_back(f);
        }
    }
    if (e->assertions.irreducible)
        c.certificates.push_back(
            cert("periodic.irreducible-asserted",
                 "the surgered manifolds under consideration are asserted irreducible",
                 "caller assertion recorded for downstream use",
                 {{"the surgeries under consideration yield irreducible manifolds",
                   false}}));
    return c;
}

Classification classify_satellite(const ExprPtr& e, const ClassifyOptions& opt) {
    Classification c;
    if (e->assertions.irreducible) {
        Classification cp = classify_impl(e->a, opt);
        c.certificates = cp.certificates;
        c.slo_lower = cp.slo_lower;
        c.slo_contains_all_integers = cp.slo_contains_all_integers;
        c.certificates.push_back(cert(
            "satellite.slopes",
            "left-orderable surgery slopes of the pattern knot are left-orderable "
            "surgery slopes of the satellite",
            "irreducible surgeries on a satellite are covered by surgeries on the pattern",
            {{"every surgery on the satellite along these slopes is irreducible", false},
             {"the slopes are left-orderable surgery slopes of the pattern", true}}));
    }
    return c;
}

Classification classify_impl(const ExprPtr& e, const ClassifyOptions& opt) {
    if (!e) throw invariant_error("empty knot expression");
    Classification c;
    switch (e->kind) {
        case KnotExpr::Kind::Trivial:
            c = classify_trivial();
            break;
        case KnotExpr::Kind::Torus:
            c = classify_torus(e->p, e->q);
            break;
        case KnotExpr::Kind::Twist:
            c = classify_twist(e->p);
            break;
        case KnotExpr::Kind::FigureEight:
            c = classify_figure_eight();
            break;
        case KnotExpr::Kind::Mirror: {
            c = classify_impl(e->a, opt);
            c.slo_lower = c.slo_lower.negate();
            if (c.slo_exact) c.slo_exact = c.slo_exact->negate();
            if (c.sl) c.sl = c.sl->negate();
            c.certificates.push_back(
                cert("mirror.negate",
                     "surgery slope sets of the mirror image are the negatives of the "
                     "original sets; the Alexander polynomial is unchanged",
                     "orientation reversal negates surgery slopes"));
            break;
        }
        case KnotExpr::Kind::Sum:
            c = classify_sum(e, opt);
            break;
        case KnotExpr::Kind::RepeatedSum:
            c = classify_repeated_sum(e, opt);
            break;
        case KnotExpr::Kind::BraidClosure: {
            PlanarDiagram d = braid_closure(*e->braid);
            if (d.component_count() != 1)
                throw invariant_error("braid closure has several components; "
                                      "classification needs a knot");
            c = classify_from_diagram(d, alexander_from_braid(*e->braid), opt);
            apply_coefficient_obstruction(c, opt);
            break;
        }
        case KnotExpr::Kind::Diagram: {
            const PlanarDiagram& d = *e->diagram;
            if (d.component_count() != 1)
                throw invariant_error("diagram has several components; classification "
                                      "needs a knot");
            c = classify_from_diagram(d, alexander_from_diagram(d), opt);
            apply_coefficient_obstruction(c, opt);
            break;
        }
        case KnotExpr::Kind::Periodic:
            c = classify_periodic(e, opt);
            break;
        case KnotExpr::Kind::Satellite:
            c = classify_satellite(e, opt);
            break;
    }
    apply_zero_slope(c);
    apply_consistency(c);
    return c;
}

int checked_int(int v, int lo, const std::string& what) {
    if (v < lo) throw invariant_error(what);
    return v;
}

}  // namespace

ExprPtr make_trivial() { return node({}); }

ExprPtr make_torus(int p, int q) {
    int ap = std::abs(p);
    if (q < 2 || ap <= q) throw invariant_error("torus parameters need |p| > q >= 2");
    int g = std::gcd(ap, q);
    if (g != 1) throw invariant_error("torus parameters must be coprime");
    KnotExpr e;
    e.kind = KnotExpr::Kind::Torus;
    e.p = p;
    e.q = q;
    return node(std::move(e));
}

ExprPtr make_twist(int n) {
    KnotExpr e;
    e.kind = KnotExpr::Kind::Twist;
    e.p = checked_int(n, 2, "twist knots here need at least 2 full twists");
    return node(std::move(e));
}

ExprPtr make_figure_eight() {
    KnotExpr e;
    e.kind = KnotExpr::Kind::FigureEight;
    return node(std::move(e));
}

ExprPtr make_mirror(ExprPtr child) {
    if (!child) throw invariant_error("mirror needs an expression");
    KnotExpr e;
    e.kind = KnotExpr::Kind::Mirror;
    e.a = std::move(child);
    return node(std::move(e));
}

ExprPtr make_sum(ExprPtr a, ExprPtr b) {
    if (!a || !b) throw invariant_error("sum needs two expressions");
    KnotExpr e;
    e.kind = KnotExpr::Kind::Sum;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr make_repeated_sum(ExprPtr child, int copies) {
    if (!child) throw invariant_error("repeated sum needs an expression");
    KnotExpr e;
    e.kind = KnotExpr::Kind::RepeatedSum;
    e.a = std::move(child);
    e.p = checked_int(copies, 1, "repeated sum needs at least 1 copy");
    return node(std::move(e));
}

ExprPtr make_braid_closure(BraidWord w) {
    KnotExpr e;
    e.kind = KnotExpr::Kind::BraidClosure;
    e.braid = std::move(w);
    return node(std::move(e));
}

ExprPtr make_diagram(PlanarDiagram d) {
    KnotExpr e;
    e.kind = KnotExpr::Kind::Diagram;
    e.diagram = std::move(d);
    return node(std::move(e));
}

ExprPtr make_periodic(AnnularTangle t, int period, GeometricAssertions assertions,
                      ExprPtr claimed_factor) {
    KnotExpr e;
    e.kind = KnotExpr::Kind::Periodic;
    e.tangle = std::move(t);
    e.p = checked_int(period, 1, "period must be at least 1");
    e.assertions = assertions;
    e.claimed_factor = std::move(claimed_factor);
    return node(std::move(e));
}

ExprPtr make_satellite(ExprPtr pattern, ExprPtr companion, bool asserted_irreducible) {
    if (!pattern || !companion) throw invariant_error("satellite needs two expressions");
    KnotExpr e;
    e.kind = KnotExpr::Kind::Satellite;
    e.a = std::move(pattern);
    e.b = std::move(companion);
    e.assertions.irreducible = asserted_irreducible;
    return node(std::move(e));
}

Classification classify(const ExprPtr& e, const ClassifyOptions& options) {
    return classify_impl(e, options);
}

std::string explain(const Classification& c) {
    std::ostringstream os;
    os << "slo_lower: " << c.slo_lower.str();
    if (c.slo_contains_all_integers) os << " together with every integer slope";
    os << "\n";
    os << "slo_exact: " << (c.slo_exact ? c.slo_exact->str() : "unknown") << "\n";
    os << "sl: ";
    switch (c.sl_status) {
        case SlStatus::Empty: os << "empty"; break;
        case SlStatus::Exact: os << c.sl->str(); break;
        case SlStatus::Unknown: os << "unknown"; break;
    }
    os << "\n";
    os << "fibered: "
       << (c.fibered == FiberedStatus::Yes      ? "yes"
           : c.fibered == FiberedStatus::No     ? "no"
                                                : "unknown")
       << "\n";
    os << "genus_lower: " << c.genus_lower << "\n";
    if (c.genus_exact) os << "genus_exact: " << *c.genus_exact << "\n";
    if (c.alexander) os << "alexander: " << c.alexander->str() << "\n";
    os << "certificates:\n";
    for (const Certificate& cc : c.certificates) {
        os << "  [" << cc.rule_id << "] " << cc.statement << " -- " << cc.citation
           << (cc.fully_verified() ? " [verified]" : " [UNVERIFIED-HYPOTHESIS]") << "\n";
        for (const Hypothesis& h : cc.hypotheses)
            os << "      * " << h.text << (h.verified ? " [checked]" : " [asserted]")
               << "\n";
    }
    return os.str();
}

}  // namespace knotcalc
