#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "knotcalc/classify.hpp"
#include "knotcalc/cli.hpp"
#include "knotcalc/formats.hpp"
#include "knotcalc/json_io.hpp"
#include "test_util.hpp"

using namespace knotcalc;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("alex prints the canonical polynomial") {
    CliResult r = run({"alex", "torus(5,2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 - t + t^2 - t^3 + t^4\n");
    CHECK(r.err.empty());

    CliResult sym = run({"alex", "torus(3,2)", "--symmetric"});
    CHECK(sym.code == 0);
    CHECK(sym.out == "t^-1 - 1 + t\n");
}

TEST_CASE("slopes evaluates and re-parses") {
    CliResult r = run({"slopes", "scale((-8,4],3)"});
    CHECK(r.code == 0);
    CHECK(r.out == "(-24,12]\n");
    // emitted canonical form round-trips to an equal value
    std::string text = r.out.substr(0, r.out.size() - 1);
    CHECK(parse_slope_expression(text) == parse_slope_expression("scale((-8,4],3)"));
}

TEST_CASE("classify text output matches the library explainer") {
    CliResult r = run({"classify", "torus(3,2)"});
    CHECK(r.code == 0);
    CHECK(r.out == explain(classify(parse_expression("torus(3,2)"))));
    CHECK(contains(r.out, "slo_exact: (-inf,1)\n"));
    CHECK(contains(r.out, "sl: [1,inf)\n"));
    CHECK(r.err.empty());
}

TEST_CASE("classify --json reports the mirrored connected sum") {
    CliResult r = run({"classify", "sum(mirror(torus(3,2)),torus(3,2))", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.begin().key() == "schema");
    CHECK(j["schema"] == 1);
    CHECK(j["slo_exact"]["text"] == "Q");
    // the flag only carries integers *beyond* the displayed set
    CHECK(j["slo_contains_all_integers"] == false);
    CHECK(j["sl_status"] == "empty");
    CHECK(j["sl"].is_null());
    CHECK(j["fibered"] == "yes");
    CHECK(j["genus_exact"] == "2");
    CHECK(j["alexander"]["text"] == "1 - 2t + 3t^2 - 2t^3 + t^4");
    bool has_pair = false;
    for (const auto& cert : j["certificates"])
        if (cert["rule_id"] == "pair.all-rationals") has_pair = true;
    CHECK(has_pair);
}

TEST_CASE("json output is deterministic and keeps numerics as strings") {
    CliResult a = run({"alex", "torus(5,2)", "--json"});
    CliResult b = run({"alex", "torus(5,2)", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::ordered_json::parse(a.out);
    CHECK(j["alexander"]["text"] == "1 - t + t^2 - t^3 + t^4");
    CHECK(j["alexander"]["terms"][0]["exp"].is_string());
    CHECK(j["alexander"]["terms"][0]["coeff"] == "1");

    CliResult s = run({"slopes", "(-8,4]", "--json"});
    auto js = nlohmann::ordered_json::parse(s.out);
    CHECK(js["slopes"]["intervals"][0]["lo"] == "-8");
}

TEST_CASE("usage problems exit 2") {
    CliResult no_sub = run({});
    CHECK(no_sub.code == 2);
    CHECK(contains(no_sub.err, "error: "));

    CHECK(run({"alex"}).code == 2);
    CHECK(run({"alex", "torus(3,2)", "--bogus"}).code == 2);
    CHECK(run({"frobnicate", "x"}).code == 2);

    CliResult bad_expr = run({"alex", "torus(3"});
    CHECK(bad_expr.code == 2);
    CHECK(contains(bad_expr.err, "parse error: "));
    CHECK(run({"slopes", "(1,2) extra"}).code == 2);
    CHECK(run({"check", data_path("does_not_exist.pd")}).code == 2);
}

TEST_CASE("domain violations exit 3") {
    CliResult r = run({"alex", "torus(4,2)"});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "invariant violation: "));
    CHECK(run({"classify", "twist(2)"}).code == 0);
    CHECK(run({"classify", "twist(1)"}).code == 3);
    CHECK(run({"classify", "nsum(fig8,0)"}).code == 3);
    CHECK(run({"slopes", "scale((-8,4],0)"}).code == 3);
}

TEST_CASE("help is available at exit 0") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "knotcalc"));
    CHECK(contains(r.out, "classify"));
}

TEST_CASE("periodic subcommand builds and classifies") {
    std::string tangle = data_path("left_trefoil_axis.tangle");
    CliResult r = run({"periodic", tangle, "5", "--assert-fiber"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "period: 5\n"));
    CHECK(contains(r.out, "axis_winding: 1\n"));
    CHECK(contains(r.out, "factor_crossings: 3\n"));
    CHECK(contains(r.out, "diagram_crossings: 15\n"));
    CHECK(contains(r.out, "slo_lower: (-5,inf)"));
    CHECK(contains(r.out, "sl: empty\n"));
    CHECK(contains(r.out, "[UNVERIFIED-HYPOTHESIS]"));
    CliResult again = run({"periodic", tangle, "5", "--assert-fiber"});
    CHECK(again.out == r.out);

    CliResult j = run({"periodic", tangle, "5", "--assert-fiber", "--json"});
    auto body = nlohmann::ordered_json::parse(j.out);
    CHECK(body["schema"] == 1);
    CHECK(body["period"] == "5");
    CHECK(body["axis_winding"] == "1");
    CHECK(body["slo_lower"]["text"] == "(-5,inf)");
    CHECK(body["genus_lower"] == "5");
    CHECK(body["sl_status"] == "empty");

    // gcd(period, winding) must be 1: winding 1 here, so period 2 is fine,
    // but a 2-periodic braid axis with winding 2 is not
    CliResult bad = run({"periodic", data_path("braid_axis_s13.tangle"), "2"});
    CHECK(bad.code == 3);
}

TEST_CASE("check subcommand reports predicates and the canonical diagram") {
    std::string pd = data_path("trefoil.pd");
    CliResult r = run({"check", pd});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "alternating: yes\n"));
    CHECK(contains(r.out, "reduced: yes\n"));
    CHECK(contains(r.out, "positive: yes\n"));
    CHECK(contains(r.out, "negative: no\n"));
    CHECK(contains(r.out, "writhe: 3\n"));
    CHECK(contains(r.out, "components: 1\n"));
    CHECK(contains(r.out, "crossings: 3\n"));
    PlanarDiagram d = load_pd_file(pd);
    CHECK(contains(r.out, render_pd_text(d)));

    CliResult j = run({"check", pd, "--json"});
    auto body = nlohmann::ordered_json::parse(j.out);
    CHECK(body["predicates"]["alternating"] == true);
    CHECK(body["predicates"]["writhe"] == "3");
    // the embedded canonical form re-parses to the same diagram
    CHECK(parse_pd_text(body["canonical_pd"].get<std::string>()) == d);
}

TEST_CASE("quiet flag is accepted") {
    CliResult r = run({"classify", "fig8", "--quiet"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
}
