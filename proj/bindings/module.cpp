#include <pybind11/pybind11.h>

#include <string>

#include "knotcalc/alexander.hpp"
#include "knotcalc/classify.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/formats.hpp"
#include "knotcalc/json_io.hpp"

namespace py = pybind11;
using namespace knotcalc;

namespace {

ClassifyOptions options(bool strict) {
    ClassifyOptions o;
    o.strict_lspace_test = strict;
    return o;
}

std::string with_schema(const nlohmann::ordered_json& body) {
    nlohmann::ordered_json o;
    o["schema"] = 1;
    o.update(body);
    return o.dump(2);
}

std::string classify_json_str(const std::string& expr, bool strict) {
    return with_schema(classification_json(classify(parse_expression(expr), options(strict))));
}

std::string classify_text_str(const std::string& expr, bool strict) {
    return explain(classify(parse_expression(expr), options(strict)));
}

std::string alexander_str(const std::string& expr, bool symmetric) {
    Classification c = classify(parse_expression(expr));
    if (!c.alexander)
        throw invariant_error("the Alexander polynomial of this expression is not determined");
    return symmetric ? symmetric_representative(*c.alexander).str() : c.alexander->str();
}

std::string slopes_str(const std::string& expr) { return parse_slope_expression(expr).str(); }

std::string check_pd_str(const std::string& pd_text) {
    PlanarDiagram d = parse_pd_text(pd_text);
    nlohmann::ordered_json body;
    body["predicates"] = predicates_json(diagram_predicates(d));
    body["canonical_pd"] = render_pd_text(d);
    return with_schema(body);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact surgery-slope and Alexander-polynomial calculator";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<invariant_error>(m, "InvariantError", PyExc_ValueError);

    m.def("classify_json", &classify_json_str, py::arg("expr"), py::arg("strict") = false,
          "classification record for a knot expression, as a JSON string");
    m.def("classify_text", &classify_text_str, py::arg("expr"), py::arg("strict") = false,
          "human-readable classification report for a knot expression");
    m.def("alexander", &alexander_str, py::arg("expr"), py::arg("symmetric") = false,
          "canonical Alexander polynomial of a knot expression");
    m.def("slopes", &slopes_str, py::arg("expr"),
          "canonical form of a slope-set expression");
    m.def("check_pd", &check_pd_str, py::arg("pd_text"),
          "diagram predicates and canonical form of a PD text, as a JSON string");
}
