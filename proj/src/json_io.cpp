#include "knotcalc/json_io.hpp"

namespace knotcalc {

using nlohmann::ordered_json;

ordered_json polynomial_json(const LaurentPolynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exp", std::to_string(e)}, {"coeff", c.str()}});
    return {{"text", p.str()}, {"terms", terms}};
}

ordered_json slope_set_json(const SlopeSet& s) {
    ordered_json intervals = ordered_json::array();
    for (const SlopeInterval& iv : s.intervals()) {
        ordered_json o;
        o["lo"] = iv.lo ? ordered_json(iv.lo->str()) : ordered_json(nullptr);
        o["lo_closed"] = iv.lo_closed;
        o["hi"] = iv.hi ? ordered_json(iv.hi->str()) : ordered_json(nullptr);
        o["hi_closed"] = iv.hi_closed;
        intervals.push_back(o);
    }
    ordered_json points = ordered_json::array();
    for (const Rational& r : s.points()) points.push_back(r.str());
    return {{"text", s.str()}, {"intervals", intervals}, {"points", points}};
}

ordered_json certificate_json(const Certificate& c) {
    ordered_json hyps = ordered_json::array();
    for (const Hypothesis& h : c.hypotheses)
        hyps.push_back({{"text", h.text}, {"verified", h.verified}});
    return {{"rule_id", c.rule_id},
            {"statement", c.statement},
            {"citation", c.citation},
            {"verified", c.fully_verified()},
            {"hypotheses", hyps}};
}

ordered_json classification_json(const Classification& c) {
    ordered_json o;
    o["slo_lower"] = slope_set_json(c.slo_lower);
    o["slo_contains_all_integers"] = c.slo_contains_all_integers;
    o["slo_exact"] = c.slo_exact ? slope_set_json(*c.slo_exact) : ordered_json(nullptr);
    o["sl_status"] = c.sl_status == SlStatus::Empty   ? "empty"
                     : c.sl_status == SlStatus::Exact ? "exact"
                                                      : "unknown";
    o["sl"] = c.sl ? slope_set_json(*c.sl) : ordered_json(nullptr);
    o["fibered"] = c.fibered == FiberedStatus::Yes  ? "yes"
                   : c.fibered == FiberedStatus::No ? "no"
                                                    : "unknown";
    o["genus_lower"] = std::to_string(c.genus_lower);
    o["genus_exact"] =
        c.genus_exact ? ordered_json(std::to_string(*c.genus_exact)) : ordered_json(nullptr);
    o["alexander"] = c.alexander ? polynomial_json(*c.alexander) : ordered_json(nullptr);
    ordered_json certs = ordered_json::array();
    for (const Certificate& cc : c.certificates) certs.push_back(certificate_json(cc));
    o["certificates"] = certs;
    return o;
}

ordered_json predicates_json(const DiagramPredicates& p) {
    ordered_json o;
    o["alternating"] = p.alternating;
    o["reduced"] = p.reduced;
    o["positive"] = p.positive;
    o["negative"] = p.negative;
    o["nonsplit"] = p.nonsplit;
    o["prime_diagram"] = p.prime_diagram;
    o["writhe"] = std::to_string(p.writhe);
    o["component_count"] = std::to_string(p.component_count);
    o["crossing_count"] = std::to_string(p.crossing_count);
    return o;
}

}  // namespace knotcalc
