#include "knotcalc/cli.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "knotcalc/classify.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/formats.hpp"
#include "knotcalc/json_io.hpp"
#include "knotcalc/periodic.hpp"

namespace knotcalc {

namespace {

using nlohmann::ordered_json;

void print_warnings(const Classification& c, std::ostream& err, bool quiet) {
    if (quiet) return;
    for (const Certificate& cert : c.certificates)
        if (cert.rule_id.rfind("consistency.", 0) == 0)
            err << "warning: " << cert.statement << "\n";
}

void emit_json(const ordered_json& body, std::ostream& out) {
    ordered_json o;
    o["schema"] = 1;
    for (const auto& item : body.items()) o[item.key()] = item.value();
    out << o.dump(2) << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact surgery-slope and Alexander-polynomial calculator"};
    app.name("knotcalc");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool json = false;
    bool quiet = false;
    ClassifyOptions options;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_flag("--quiet", quiet, "suppress consistency warnings");
    app.add_flag("--strict-lspace-test", options.strict_lspace_test,
                 "also require strictly alternating coefficient signs in the "
                 "L-space coefficient obstruction");

    std::string alex_expr;
    bool symmetric = false;
    CLI::App* alex = app.add_subcommand("alex", "Alexander polynomial of a knot expression");
    alex->add_option("expr", alex_expr, "knot expression")->required();
    alex->add_flag("--symmetric", symmetric, "center the exponents about 0");

    std::string classify_expr;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "surgery-slope facts for a knot expression");
    classify_cmd->add_option("expr", classify_expr, "knot expression")->required();

    std::string slopes_expr;
    CLI::App* slopes = app.add_subcommand("slopes", "evaluate a slope-set expression");
    slopes->add_option("expr", slopes_expr, "slope-set expression")->required();

    std::string tangle_path;
    int period = 0;
    bool assert_fiber = false;
    bool assert_perp = false;
    bool assert_irreducible = false;
    std::string factor_expr;
    CLI::App* periodic =
        app.add_subcommand("periodic", "build and classify a periodic knot from an annular tangle");
    periodic->add_option("tangle", tangle_path, "annular tangle file")->required();
    periodic->add_option("period", period, "number of cyclic copies")->required();
    periodic->add_flag("--assert-fiber", assert_fiber,
                       "assert that every fiber surface of the factor meets the axis in more "
                       "points than their linking number");
    periodic->add_flag("--assert-perp", assert_perp,
                       "assert that the axis is a perpendicular circle for the factor diagram");
    periodic->add_flag("--assert-irreducible", assert_irreducible,
                       "assert that the surgered manifolds are irreducible");
    periodic->add_option("--factor", factor_expr, "claimed factor knot expression");

    std::string pd_path;
    CLI::App* check = app.add_subcommand("check", "validate a PD file and report its predicates");
    check->add_option("pd", pd_path, "planar diagram file")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (alex->parsed()) {
            Classification c = classify(parse_expression(alex_expr), options);
            if (!c.alexander)
                throw invariant_error(
                    "the Alexander polynomial of this expression is not determined");
            LaurentPolynomial poly =
                symmetric ? symmetric_representative(*c.alexander) : *c.alexander;
            if (json)
                emit_json({{"alexander", polynomial_json(poly)}}, out);
            else
                out << poly.str() << "\n";
        } else if (classify_cmd->parsed()) {
            Classification c = classify(parse_expression(classify_expr), options);
            print_warnings(c, err, quiet);
            if (json)
                emit_json(classification_json(c), out);
            else
                out << explain(c);
        } else if (slopes->parsed()) {
            SlopeSet s = parse_slope_expression(slopes_expr);
            if (json)
                emit_json({{"slopes", slope_set_json(s)}}, out);
            else
                out << s.str() << "\n";
        } else if (periodic->parsed()) {
            AnnularTangle t = load_tangle_file(tangle_path);
            GeometricAssertions assertions;
            assertions.fiber_excess = assert_fiber;
            assertions.perpendicular = assert_perp;
            assertions.irreducible = assert_irreducible;
            ExprPtr factor;
            if (!factor_expr.empty()) factor = parse_expression(factor_expr);
            PeriodicResult built = construct(t, period);
            Classification c =
                classify(make_periodic(std::move(t), period, assertions, factor), options);
            print_warnings(c, err, quiet);
            if (json) {
                ordered_json body;
                body["period"] = std::to_string(built.period);
                body["axis_winding"] = std::to_string(built.axis_winding);
                body["factor_crossings"] = std::to_string(built.factor.crossing_count());
                body["diagram_crossings"] = std::to_string(built.diagram.crossing_count());
                ordered_json cls = classification_json(c);
                for (const auto& item : cls.items()) body[item.key()] = item.value();
                emit_json(body, out);
            } else {
                out << "period: " << built.period << "\n";
                out << "axis_winding: " << built.axis_winding << "\n";
                out << "factor_crossings: " << built.factor.crossing_count() << "\n";
                out << "diagram_crossings: " << built.diagram.crossing_count() << "\n";
                out << explain(c);
            }
        } else if (check->parsed()) {
            PlanarDiagram d = load_pd_file(pd_path);
            DiagramPredicates p = diagram_predicates(d);
            if (json) {
                ordered_json body;
                body["predicates"] = predicates_json(p);
                body["canonical_pd"] = render_pd_text(d);
                emit_json(body, out);
            } else {
                auto yn = [](bool b) { return b ? "yes" : "no"; };
                out << "alternating: " << yn(p.alternating) << "\n";
                out << "reduced: " << yn(p.reduced) << "\n";
                out << "positive: " << yn(p.positive) << "\n";
                out << "negative: " << yn(p.negative) << "\n";
                out << "nonsplit: " << yn(p.nonsplit) << "\n";
                out << "prime_diagram: " << yn(p.prime_diagram) << "\n";
                out << "writhe: " << p.writhe << "\n";
                out << "components: " << p.component_count << "\n";
                out << "crossings: " << p.crossing_count << "\n";
                out << render_pd_text(d);
            }
        }
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace knotcalc
