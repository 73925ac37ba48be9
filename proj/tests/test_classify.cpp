#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "knotcalc/classify.hpp"
#include "knotcalc/formats.hpp"
#include "knotcalc/tangle.hpp"
#include "test_util.hpp"

using namespace knotcalc;

namespace {

bool has_rule(const Classification& c, const std::string& id) {
    return std::any_of(c.certificates.begin(), c.certificates.end(),
                       [&](const Certificate& cert) { return cert.rule_id == id; });
}

std::vector<ExprPtr> corpus() {
    AnnularTangle cut = cut_open(braid_closure(BraidWord(2, {-1, -1, -1})), 0);
    GeometricAssertions fiber;
    fiber.fiber_excess = true;
    return {
        make_trivial(),
        make_torus(3, 2),
        make_torus(5, 2),
        make_torus(-7, 2),
        make_torus(7, 3),
        make_twist(2),
        make_twist(6),
        make_figure_eight(),
        make_mirror(make_torus(3, 2)),
        make_sum(make_torus(3, 2), make_twist(2)),
        make_sum(make_mirror(make_torus(3, 2)), make_torus(3, 2)),
        make_repeated_sum(make_torus(3, 2), 3),
        make_repeated_sum(make_figure_eight(), 2),
        make_braid_closure(BraidWord(2, {1, 1, 1})),
        make_braid_closure(BraidWord(3, {1, -2, 1, -2})),
        make_diagram(braid_closure(BraidWord(3, {1, -2, 1, -2}))),
        make_periodic(cut, 3),
        make_periodic(braid_tangle(BraidWord(2, {1, 1, 1})), 5, fiber),
        make_satellite(make_figure_eight(), make_torus(3, 2), false),
        make_satellite(make_figure_eight(), make_torus(3, 2), true),
    };
}

}  // namespace

TEST_CASE("the unknot") {
    Classification c = classify(make_trivial());
    REQUIRE(c.slo_exact.has_value());
    CHECK(c.slo_exact->str() == "{0}");
    CHECK(c.sl_status == SlStatus::Exact);
    REQUIRE(c.sl.has_value());
    CHECK(c.sl->str() == "(-inf,0) u (0,inf)");
    CHECK(c.fibered == FiberedStatus::Yes);
    CHECK(c.genus_exact == 0);
    CHECK(c.alexander == LaurentPolynomial::constant(1));
}

TEST_CASE("torus knots read off the catalog") {
    Classification c = classify(make_torus(3, 2));
    REQUIRE(c.slo_exact.has_value());
    CHECK(c.slo_exact->str() == "(-inf,1)");
    CHECK(c.sl_status == SlStatus::Exact);
    CHECK(c.sl->str() == "[1,inf)");
    CHECK(c.genus_exact == 1);
    CHECK(c.fibered == FiberedStatus::Yes);
    CHECK(c.alexander == torus_alexander(3, 2));

    // the L-space sets are the half lines [2g-1, inf)
    for (auto [p, q] : {std::pair{5, 2}, {7, 2}, {7, 3}, {9, 2}}) {
        Classification t = classify(make_torus(p, q));
        int g = (p - 1) * (q - 1) / 2;
        CHECK(t.genus_exact == g);
        CHECK(t.sl->str() == "[" + std::to_string(2 * g - 1) + ",inf)");
        CHECK(lspace_structure_check(*t.sl, g));
    }
    CHECK_THROWS_AS(make_torus(4, 2), invariant_error);
    CHECK_THROWS_AS(make_torus(2, 2), invariant_error);
    CHECK_THROWS_AS(make_torus(3, 1), invariant_error);
}

TEST_CASE("twist knots have no L-space surgeries") {
    for (int n = 2; n <= 6; ++n) {
        Classification c = classify(make_twist(n));
        CHECK(c.sl_status == SlStatus::Empty);
        CHECK(c.fibered == FiberedStatus::No);
        CHECK(c.genus_exact == 1);
        CHECK(c.slo_lower.str() == "(-" + std::to_string(4 * n) + ",4]");
        CHECK(c.alexander == twist_alexander(n));
    }
    CHECK_THROWS_AS(make_twist(1), invariant_error);
}

TEST_CASE("the figure eight") {
    Classification c = classify(make_figure_eight());
    CHECK(c.slo_lower.str() == "[-4,4]");
    CHECK(c.slo_contains_all_integers);
    CHECK_FALSE(c.slo_exact.has_value());
    CHECK(c.sl_status == SlStatus::Empty);
    CHECK(c.fibered == FiberedStatus::Yes);
    CHECK(c.genus_exact == 1);
    CHECK(c.alexander == twist_alexander(1));
}

TEST_CASE("mirrors negate exactly the slope data") {
    Classification c = classify(make_mirror(make_torus(3, 2)));
    CHECK(c.slo_exact->str() == "(-1,inf)");
    CHECK(c.sl->str() == "(-inf,-1]");
    CHECK(c.alexander == torus_alexander(3, 2));
    CHECK(c.genus_exact == 1);
}

TEST_CASE("connected sums combine additively") {
    Classification c = classify(make_sum(make_torus(3, 2), make_twist(2)));
    CHECK(c.slo_lower.str() == "(-inf,4]");  // union of the summand intervals
    CHECK(c.sl_status == SlStatus::Empty);   // one summand is not fibered
    CHECK(c.fibered == FiberedStatus::No);
    CHECK(c.genus_exact == 2);
    CHECK(c.alexander ==
          multiply_canonical(torus_alexander(3, 2), twist_alexander(2)));
    CHECK(has_rule(c, "sum.nonfibered"));
}

TEST_CASE("mirrored pairs of torus knots cover all rational slopes") {
    for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {5, 3}, {5, 4}, {4, 3}}) {
        Classification c =
            classify(make_sum(make_mirror(make_torus(p, q)), make_torus(p, q)));
        REQUIRE(c.slo_exact.has_value());
        CHECK(c.slo_exact->is_all());
        CHECK(c.sl_status == SlStatus::Empty);
        CHECK(has_rule(c, "pair.all-rationals"));
        CHECK(has_rule(c, "pair.t-coefficient"));
        CHECK(has_rule(c, "promotion.full"));
    }
}

TEST_CASE("repeated sums scale the slope data") {
    Classification c = classify(make_repeated_sum(make_torus(3, 2), 3));
    CHECK(c.slo_lower.str() == "(-inf,3)");
    CHECK(c.genus_exact == 3);
    CHECK(c.alexander->coeff(3) == -7);
    CHECK(c.sl_status == SlStatus::Empty);

    // one copy collapses to the child classification
    Classification one = classify(make_repeated_sum(make_figure_eight(), 1));
    Classification f8 = classify(make_figure_eight());
    CHECK(one.slo_lower == f8.slo_lower);
    CHECK(one.slo_contains_all_integers == f8.slo_contains_all_integers);

    // the all-integers widening does not survive scaling
    Classification two = classify(make_repeated_sum(make_figure_eight(), 2));
    CHECK(two.slo_lower.str() == "[-8,8]");
    CHECK_FALSE(two.slo_contains_all_integers);
    CHECK_THROWS_AS(make_repeated_sum(make_trivial(), 0), invariant_error);
}

TEST_CASE("braid and diagram expressions recognize small knots") {
    Classification c = classify(make_braid_closure(BraidWord(2, {1, 1, 1})));
    CHECK(c.slo_exact->str() == "(-inf,1)");
    CHECK(c.sl->str() == "[1,inf)");
    CHECK(has_rule(c, "diagram.recognized"));

    Classification m = classify(make_braid_closure(BraidWord(2, {-1, -1, -1})));
    CHECK(m.slo_exact->str() == "(-1,inf)");

    Classification f = classify(make_diagram(braid_closure(BraidWord(3, {1, -2, 1, -2}))));
    CHECK(f.sl_status == SlStatus::Empty);
    CHECK(f.slo_contains_all_integers);

    // an unrecognized diagram still yields the polynomial facts
    PlanarDiagram big = braid_closure(BraidWord(2, {1, 1, 1, 1, 1}));
    Classification t52 = classify(make_diagram(big));
    CHECK(t52.alexander == torus_alexander(5, 2));
    CHECK(t52.genus_lower == 2);
    CHECK(t52.sl_status == SlStatus::Unknown);
    CHECK(t52.slo_lower.member(Rational(0)));

    CHECK_THROWS_AS(classify(make_braid_closure(BraidWord(2, {1, 1}))), invariant_error);
}

TEST_CASE("periodic expressions lift the factor classification") {
    AnnularTangle cut = cut_open(braid_closure(BraidWord(2, {-1, -1, -1})), 0);
    GeometricAssertions fiber;
    fiber.fiber_excess = true;
    Classification c = classify(make_periodic(cut, 5, fiber));
    CHECK(c.slo_lower.str() == "(-5,inf)");
    CHECK(c.genus_lower == 5);
    CHECK(c.sl_status == SlStatus::Empty);
    CHECK(has_rule(c, "periodic.factor-recognized"));
    CHECK(has_rule(c, "periodic.slope-lift"));
    CHECK(has_rule(c, "periodic.sl-empty-asserted"));

    // without the assertion the coefficient obstruction still applies here
    Classification plain = classify(make_periodic(cut, 5));
    CHECK(plain.slo_lower.str() == "(-5,inf)");
    CHECK(plain.sl_status == SlStatus::Empty);
    CHECK_FALSE(has_rule(plain, "periodic.sl-empty-asserted"));
    CHECK(has_rule(plain, "alexander.sl-empty"));

    // a claimed factor must match the computed polynomial
    CHECK_THROWS_AS(
        classify(make_periodic(cut, 5, {}, make_figure_eight())), invariant_error);
    Classification claimed =
        classify(make_periodic(cut, 5, {}, make_mirror(make_torus(3, 2))));
    CHECK(claimed.slo_lower.str() == "(-5,inf)");

    // factors beyond the recognizer need a caller claim to unlock the lift
    AnnularTangle cut52 = cut_open(braid_closure(BraidWord(2, {1, 1, 1, 1, 1})), 0);
    Classification asserted = classify(make_periodic(cut52, 3, {}, make_torus(5, 2)));
    CHECK(asserted.slo_lower.str() == "(-inf,9)");
    CHECK(has_rule(asserted, "periodic.factor-asserted"));
    CHECK(has_rule(asserted, "periodic.slope-lift"));
    Classification unclaimed = classify(make_periodic(cut52, 3));
    CHECK_FALSE(has_rule(unclaimed, "periodic.slope-lift"));
    CHECK_THROWS_AS(classify(make_periodic(cut52, 3, {}, make_torus(7, 2))),
                    invariant_error);
}

TEST_CASE("perpendicular-axis assertions unlock the alternating facts") {
    AnnularTangle cut = cut_open(braid_closure(BraidWord(3, {1, -2, 1, -2})), 0);
    GeometricAssertions perp;
    perp.perpendicular = true;
    Classification c = classify(make_periodic(cut, 3, perp));
    CHECK(has_rule(c, "periodic.alternating"));
    CHECK(has_rule(c, "periodic.slope-family"));
    CHECK(has_rule(c, "periodic.sl-empty-alternating"));
    CHECK(c.sl_status == SlStatus::Empty);

    Classification plain = classify(make_periodic(cut, 3));
    CHECK_FALSE(has_rule(plain, "periodic.alternating"));
}

TEST_CASE("satellites only keep pattern slopes under the irreducibility assertion") {
    ExprPtr pattern = make_figure_eight();
    ExprPtr companion = make_torus(3, 2);
    Classification held = classify(make_satellite(pattern, companion, false));
    CHECK(held.slo_lower.str() == "{0}");
    CHECK_FALSE(held.slo_contains_all_integers);
    CHECK(held.sl_status == SlStatus::Unknown);

    Classification asserted = classify(make_satellite(pattern, companion, true));
    CHECK(asserted.slo_lower.member(Rational(4)));
    CHECK(asserted.slo_contains_all_integers);
    CHECK(has_rule(asserted, "satellite.slopes"));
    // the lifted conclusion rests on an unverified hypothesis
    for (const Certificate& cert : asserted.certificates)
        if (cert.rule_id == "satellite.slopes") CHECK_FALSE(cert.fully_verified());

    // monotonicity: asserting more never shrinks the slope set
    for (const SlopeInterval& iv : held.slo_lower.intervals()) {
        (void)iv;
    }
    CHECK(asserted.slo_lower.intersect(held.slo_lower) == held.slo_lower);
}

TEST_CASE("zero is always a left-orderable surgery slope and never an L-space slope") {
    for (const ExprPtr& e : corpus()) {
        Classification c = classify(e);
        CHECK(c.slo_lower.member(Rational(0)));
        if (c.sl_status == SlStatus::Exact) CHECK_FALSE(c.sl->member(Rational(0)));
    }
}

TEST_CASE("mirror classifications negate the slope data and keep the rest") {
    for (const ExprPtr& e : corpus()) {
        Classification c = classify(e);
        Classification m = classify(make_mirror(e));
        CHECK(m.slo_lower == c.slo_lower.negate());
        CHECK(m.slo_contains_all_integers == c.slo_contains_all_integers);
        REQUIRE(m.slo_exact.has_value() == c.slo_exact.has_value());
        if (c.slo_exact) CHECK(*m.slo_exact == c.slo_exact->negate());
        CHECK(m.sl_status == c.sl_status);
        REQUIRE(m.sl.has_value() == c.sl.has_value());
        if (c.sl) CHECK(*m.sl == c.sl->negate());
        CHECK(m.fibered == c.fibered);
        CHECK(m.genus_lower == c.genus_lower);
        CHECK(m.genus_exact == c.genus_exact);
        CHECK(m.alexander == c.alexander);
        // double mirror is the identity on every reported fact
        Classification mm = classify(make_mirror(make_mirror(e)));
        CHECK(mm.slo_lower == c.slo_lower);
        CHECK(mm.sl_status == c.sl_status);
    }
}

TEST_CASE("expression and diagram realizations agree on the polynomial") {
    CHECK(classify(make_torus(3, 2)).alexander ==
          classify(make_braid_closure(BraidWord(2, {1, 1, 1}))).alexander);
    CHECK(classify(make_figure_eight()).alexander ==
          classify(make_diagram(braid_closure(BraidWord(3, {1, -2, 1, -2})))).alexander);
    PlanarDiagram s = connected_sum(braid_closure(BraidWord(2, {1, 1, 1})),
                                    braid_closure(BraidWord(3, {1, -2, 1, -2})), 0, 0);
    CHECK(classify(make_diagram(s)).alexander ==
          classify(make_sum(make_torus(3, 2), make_figure_eight())).alexander);
}

TEST_CASE("no consistency warnings arise on sound inputs") {
    for (const ExprPtr& e : corpus()) {
        Classification c = classify(e);
        for (const Certificate& cert : c.certificates)
            CHECK(cert.rule_id.rfind("consistency.", 0) != 0);
    }
}

TEST_CASE("strict obstruction mode never weakens results") {
    ClassifyOptions strict;
    strict.strict_lspace_test = true;
    for (const ExprPtr& e : corpus()) {
        Classification a = classify(e);
        Classification b = classify(e, strict);
        CHECK(a.slo_lower == b.slo_lower);
        if (a.sl_status == SlStatus::Empty) CHECK(b.sl_status == SlStatus::Empty);
    }
}

TEST_CASE("expression text forms round trip through the parser") {
    Classification direct = classify(make_sum(make_mirror(make_torus(3, 2)), make_torus(3, 2)));
    Classification parsed = classify(parse_expression("sum(mirror(torus(3,2)),torus(3,2))"));
    CHECK(parsed.slo_exact == direct.slo_exact);
    CHECK(parsed.sl_status == direct.sl_status);

    CHECK(classify(parse_expression("trivial")).genus_exact == 0);
    CHECK(classify(parse_expression("twist(2)")).alexander == twist_alexander(2));
    CHECK(classify(parse_expression("nsum(torus(3,2),3)")).genus_exact == 3);
    CHECK(classify(parse_expression("fig8")).slo_contains_all_integers);
    CHECK(classify(parse_expression("braid(\"BR 2: 1 1 1\")")).slo_exact->str() == "(-inf,1)");

    Classification from_file =
        classify(parse_expression("pd(" + data_path("fig8.pd") + ")"));
    CHECK(from_file.sl_status == SlStatus::Empty);
    CHECK(classify(parse_expression("braid(" + data_path("sigma1_cubed.braid") + ")"))
              .slo_exact->str() == "(-inf,1)");

    Classification per = classify(parse_expression(
        "periodic(" + data_path("left_trefoil_axis.tangle") + ", 5, assert=fiber)"));
    CHECK(per.slo_lower.str() == "(-5,inf)");
    CHECK(per.sl_status == SlStatus::Empty);
    CHECK(per.genus_lower == 5);

    Classification perf = classify(parse_expression(
        "periodic(" + data_path("left_trefoil_axis.tangle") +
        ", 5, assert=fiber+perp, factor=mirror(torus(3,2)))"));
    CHECK(perf.slo_lower.str() == "(-5,inf)");

    Classification sat = classify(
        parse_expression("satellite(fig8, torus(3,2), assert=irreducible)"));
    CHECK(sat.slo_contains_all_integers);

    CHECK_THROWS_AS(parse_expression("torus(3,2"), parse_error);
    CHECK_THROWS_AS(parse_expression("unknownknot"), parse_error);
    CHECK_THROWS_AS(parse_expression("torus(3,2) extra"), parse_error);
    CHECK_THROWS_AS(parse_expression("sum(trivial)"), parse_error);
    CHECK_THROWS_AS(parse_expression(""), parse_error);
    // structurally fine, semantically invalid
    CHECK_THROWS_AS(parse_expression("torus(4,2)"), invariant_error);
    CHECK_THROWS_AS(parse_expression("twist(1)"), invariant_error);
}

TEST_CASE("reports list the facts before the certificate chain") {
    Classification c = classify(make_torus(3, 2));
    std::string text = explain(c);
    CHECK(text.find("slo_exact: (-inf,1)") != std::string::npos);
    CHECK(text.find("sl: [1,inf)") != std::string::npos);
    CHECK(text.find("fibered: yes") != std::string::npos);
    CHECK(text.find("genus_exact: 1") != std::string::npos);
    CHECK(text.find("[torus.catalog]") != std::string::npos);
    CHECK(text.find("certificates:") != std::string::npos);

    GeometricAssertions fiber;
    fiber.fiber_excess = true;
    AnnularTangle cut = cut_open(braid_closure(BraidWord(2, {-1, -1, -1})), 0);
    std::string report = explain(classify(make_periodic(cut, 5, fiber)));
    CHECK(report.find("UNVERIFIED-HYPOTHESIS") != std::string::npos);
    CHECK(report.find("[asserted]") != std::string::npos);
}
