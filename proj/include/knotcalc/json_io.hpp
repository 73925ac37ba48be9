#pragma once

#include "json.hpp"
#include "knotcalc/classify.hpp"

namespace knotcalc {

// JSON views of the core value types.  All mathematical integers and
// rationals are rendered as strings so consumers never lose exactness;
// field order is fixed for byte-identical output.
nlohmann::ordered_json polynomial_json(const LaurentPolynomial& p);
nlohmann::ordered_json slope_set_json(const SlopeSet& s);
nlohmann::ordered_json certificate_json(const Certificate& c);
nlohmann::ordered_json classification_json(const Classification& c);
nlohmann::ordered_json predicates_json(const DiagramPredicates& p);

}  // namespace knotcalc
