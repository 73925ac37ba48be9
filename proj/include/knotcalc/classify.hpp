#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotcalc/alexander.hpp"
#include "knotcalc/certificate.hpp"
#include "knotcalc/diagram.hpp"
#include "knotcalc/slope_set.hpp"
#include "knotcalc/tangle.hpp"

namespace knotcalc {

struct KnotExpr;
using ExprPtr = std::shared_ptr<const KnotExpr>;

// Caller-asserted geometric hypotheses for periodic and satellite nodes.
// None of them can be decided from the combinatorial input; each one only
// ever enters a result through a certificate whose hypothesis is marked
// unverified.
struct GeometricAssertions {
    // Every fiber surface of the factor meets the axis in more points than
    // the factor-axis linking number.
    bool fiber_excess = false;
    // The axis is a perpendicular circle for the factor diagram.
    bool perpendicular = false;
    // The surgeries under consideration yield irreducible manifolds.
    bool irreducible = false;
};

// Expression tree describing how a knot is built.  Use the make_* helpers,
// which validate parameters.
struct KnotExpr {
    enum class Kind {
        Trivial,      // unknot
        Torus,        // T(p,q), coprime, |p| > q >= 2
        Twist,        // n-twisted double of the unknot, n > 1
        FigureEight,  // the 4-crossing knot
        Mirror,       // mirror image of child a
        Sum,          // connected sum of a and b
        RepeatedSum,  // connected sum of p copies of a
        BraidClosure,
        Diagram,
        Periodic,     // p-periodic knot built from an annular tangle
        Satellite,    // pattern a in a tubular neighborhood of companion b
    };

    Kind kind = Kind::Trivial;
    int p = 0;  // torus p / twist n / copy count / period
    int q = 0;  // torus q
    ExprPtr a;
    ExprPtr b;
    std::optional<BraidWord> braid;
    std::optional<PlanarDiagram> diagram;
    std::optional<AnnularTangle> tangle;
    GeometricAssertions assertions;
    ExprPtr claimed_factor;  // optional identification of a periodic factor
};

ExprPtr make_trivial();
ExprPtr make_torus(int p, int q);
ExprPtr make_twist(int n);
ExprPtr make_figure_eight();
ExprPtr make_mirror(ExprPtr e);
ExprPtr make_sum(ExprPtr a, ExprPtr b);
ExprPtr make_repeated_sum(ExprPtr e, int copies);
ExprPtr make_braid_closure(BraidWord w);
ExprPtr make_diagram(PlanarDiagram d);
ExprPtr make_periodic(AnnularTangle t, int period, GeometricAssertions assertions = {},
                      ExprPtr claimed_factor = nullptr);
ExprPtr make_satellite(ExprPtr pattern, ExprPtr companion, bool asserted_irreducible);

enum class SlStatus { Empty, Exact, Unknown };
enum class FiberedStatus { Yes, No, Unknown };

// Everything the rule engine could establish about a knot expression.
// slo_lower is always a valid lower bound for the left-orderable surgery
// set; slo_exact is present only when the whole set is known.  The
// all-integers flag widens slo_lower by the set of integer slopes (which is
// not representable as a finite interval union).
struct Classification {
    SlopeSet slo_lower;
    std::optional<SlopeSet> slo_exact;
    bool slo_contains_all_integers = false;
    SlStatus sl_status = SlStatus::Unknown;
    std::optional<SlopeSet> sl;  // present exactly when sl_status == Exact
    FiberedStatus fibered = FiberedStatus::Unknown;
    int genus_lower = 0;
    std::optional<int> genus_exact;
    std::optional<LaurentPolynomial> alexander;  // canonical form
    std::vector<Certificate> certificates;
};

struct ClassifyOptions {
    // Use the sharper alternating-sign coefficient test when deciding the
    // L-space obstruction.
    bool strict_lspace_test = false;
};

// Bottom-up rule engine; every conclusion carries a certificate.  Errors on
// expressions that violate their own invariants (bad parameters, closures
// with several components, refuted factor claims).
Classification classify(const ExprPtr& e, const ClassifyOptions& options = {});

// Human-readable report: the established facts followed by the certificate
// chain, one line per rule with its citation and verification status.
std::string explain(const Classification& c);

// Parses the expression language:
//   trivial | torus(p,q) | twist(n) | fig8 | mirror(E) | sum(E,E) |
//   nsum(E,p) | braid("BR n: ...") | braid(file.braid) | pd(file.pd) |
//   periodic(file.tangle, p[, assert=fiber|perp|irreducible]*[, factor=E]) |
//   satellite(E, E[, assert=irreducible])
// File paths are resolved relative to the working directory.
ExprPtr parse_expression(const std::string& text);

}  // namespace knotcalc
