#include <numeric>

#include "doctest.h"
#include "knotcalc/alexander.hpp"
#include "knotcalc/diagram.hpp"

using namespace knotcalc;

using LP = LaurentPolynomial;

namespace {

// (p,q) torus knot as the closure of (s_1 ... s_{q-1})^p on q strands.
BraidWord torus_braid(int p, int q) {
    std::vector<int> word;
    for (int i = 0; i < p; ++i)
        for (int j = 1; j < q; ++j) word.push_back(j);
    return BraidWord(q, word);
}

}  // namespace

TEST_CASE("canonical form fixes the unit") {
    LP p = LP::parse("-t^2 + t^3 - t^4");
    CHECK(canonical_alexander_form(p) == LP::parse("1 - t + t^2"));
    CHECK(canonical_alexander_form(LP()) == LP());
    CHECK(canonical_alexander_form(LP::parse("t^-3")) == LP::parse("1"));
}

TEST_CASE("closed torus formula on small knots") {
    CHECK(torus_alexander(3, 2) == LP::parse("1 - t + t^2"));
    CHECK(torus_alexander(5, 2) == LP::parse("1 - t + t^2 - t^3 + t^4"));
    CHECK(torus_alexander(5, 3) == LP::parse("1 - t + t^3 - t^4 + t^5 - t^7 + t^8"));
    // mirror invariance of the formula
    CHECK(torus_alexander(-3, 2) == torus_alexander(3, 2));
    CHECK(torus_alexander(2, 5) == torus_alexander(5, 2));
    CHECK(torus_alexander(7, 1) == LP::parse("1"));
    CHECK_THROWS_AS(torus_alexander(4, 2), invariant_error);
    CHECK_THROWS_AS(torus_alexander(3, 0), invariant_error);
}

TEST_CASE("three computation paths agree on torus knots") {
    for (int p = 2; p <= 7; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LP formula = torus_alexander(p, q);
            BraidWord b = torus_braid(p, q);
            CHECK(alexander_from_braid(b) == formula);
            CHECK(alexander_from_diagram(braid_closure(b)) == formula);
        }
}

TEST_CASE("diagram computation handles the standard small knots") {
    PlanarDiagram fig8 = braid_closure(BraidWord(3, {1, -2, 1, -2}));
    LP d8 = alexander_from_diagram(fig8);
    CHECK(d8 == LP::parse("1 - 3t + t^2"));
    CHECK(d8 == twist_alexander(1));
    CHECK(d8.evaluate(-1) == 5);

    CHECK(alexander_from_diagram(PlanarDiagram::unknot()) == LP::parse("1"));
    // one-crossing kink presentation of the unknot
    CHECK(alexander_from_diagram(braid_closure(BraidWord(2, {1}))) == LP::parse("1"));
    CHECK_THROWS_AS(alexander_from_diagram(braid_closure(BraidWord(2, {1, 1}))), invariant_error);
}

TEST_CASE("mirror invariance and connected-sum multiplicativity") {
    PlanarDiagram trefoil = braid_closure(BraidWord(2, {1, 1, 1}));
    PlanarDiagram fig8 = braid_closure(BraidWord(3, {1, -2, 1, -2}));
    CHECK(alexander_from_diagram(mirror(trefoil)) == alexander_from_diagram(trefoil));
    CHECK(alexander_from_diagram(mirror(fig8)) == alexander_from_diagram(fig8));

    PlanarDiagram s = connected_sum(trefoil, fig8, 0, 0);
    CHECK(alexander_from_diagram(s) ==
          multiply_canonical(alexander_from_diagram(trefoil), alexander_from_diagram(fig8)));
}

TEST_CASE("canonical polynomials of knots are palindromic") {
    for (const LP& d : {torus_alexander(3, 2), torus_alexander(7, 4), twist_alexander(1),
                        twist_alexander(5)}) {
        LP reversed;
        for (const auto& [e, c] : d.terms())
            reversed = reversed + LP::monomial(d.span() - e, c);
        CHECK(reversed == d);
    }
}

TEST_CASE("twist knot polynomials") {
    CHECK(twist_alexander(1) == LP::parse("1 - 3t + t^2"));
    CHECK(twist_alexander(2) == LP::parse("2 - 5t + 2t^2"));
    CHECK(twist_alexander(6) == LP::parse("6 - 13t + 6t^2"));
    for (int n = 1; n <= 6; ++n) {
        Integer v = twist_alexander(n).evaluate(1);
        CHECK((v == 1 || v == -1));
    }
    CHECK_THROWS_AS(twist_alexander(0), invariant_error);
}

TEST_CASE("t-coefficient extraction needs a normalized polynomial") {
    CHECK(coefficient_of_t(torus_alexander(3, 2)) == -1);
    CHECK(coefficient_of_t(torus_alexander(7, 5)) == -1);
    CHECK(coefficient_of_t(LP::parse("1 - 2t + 3t^2")) == -2);
    CHECK(coefficient_of_t(LP::parse("1")) == 0);
    // constant term must be exactly 1
    CHECK_THROWS_AS(coefficient_of_t(twist_alexander(2)), invariant_error);
    // exponents must start at 0
    CHECK_THROWS_AS(coefficient_of_t(LP::parse("t - t^2 + t^3")), invariant_error);
}

TEST_CASE("coefficient obstruction for L-space surgeries") {
    CHECK(lspace_coefficient_obstruction(torus_alexander(3, 2)) ==
          LSpaceObstruction::NotObstructed);
    CHECK(lspace_coefficient_obstruction(torus_alexander(5, 2)) ==
          LSpaceObstruction::NotObstructed);
    CHECK(lspace_coefficient_obstruction(twist_alexander(1)) == LSpaceObstruction::Obstructed);
    CHECK(lspace_coefficient_obstruction(twist_alexander(2)) == LSpaceObstruction::Obstructed);

    // the strict mode also rejects consecutive coefficients of equal sign
    LP same_sign = LP::parse("1 + t");
    CHECK(lspace_coefficient_obstruction(same_sign) == LSpaceObstruction::NotObstructed);
    CHECK(lspace_coefficient_obstruction(same_sign, true) == LSpaceObstruction::Obstructed);
    // gaps are fine as long as the signs alternate
    LP gap = LP::parse("1 - t^2 + t^4");
    CHECK(lspace_coefficient_obstruction(gap, true) == LSpaceObstruction::NotObstructed);
}

TEST_CASE("symmetric representative centers the exponents") {
    LP sym = symmetric_representative(torus_alexander(3, 2));
    CHECK(sym.str() == "t^-1 - 1 + t");
    CHECK(sym.min_exp() == -sym.max_exp());
    CHECK(canonical_alexander_form(sym) == torus_alexander(3, 2));
    CHECK_THROWS_AS(symmetric_representative(LP::parse("1 + t")), invariant_error);
}

TEST_CASE("monic detection and genus bound") {
    CHECK(monic(torus_alexander(3, 2)));
    CHECK(monic(twist_alexander(1)));
    CHECK_FALSE(monic(twist_alexander(2)));
    CHECK(alexander_genus_bound(torus_alexander(3, 2)) == 1);
    CHECK(alexander_genus_bound(torus_alexander(5, 2)) == 2);
    CHECK(alexander_genus_bound(torus_alexander(5, 4)) == 6);
    CHECK(alexander_genus_bound(LP::parse("1")) == 0);
    CHECK_THROWS_AS(alexander_genus_bound(LP::parse("1 + t")), invariant_error);
}

TEST_CASE("multiply_canonical recanonicalizes") {
    LP a = torus_alexander(3, 2);
    CHECK(multiply_canonical(a, a) == LP::parse("1 - 2t + 3t^2 - 2t^3 + t^4"));
    CHECK(multiply_canonical(a, LP::parse("1")) == a);
}

TEST_CASE("periodicity congruence") {
    // Delta(T(2,3p)) against the trefoil factor with axis linking number 2
    for (int p : {3, 5, 7})
        CHECK(murasugi_congruence(torus_alexander(3 * p, 2), torus_alexander(3, 2), p, 2));
    CHECK_FALSE(murasugi_congruence(torus_alexander(5, 2), torus_alexander(3, 2), 5, 2));
}
