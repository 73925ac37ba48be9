#pragma once

#include <string>

#include "knotcalc/diagram.hpp"
#include "knotcalc/slope_set.hpp"
#include "knotcalc/tangle.hpp"

namespace knotcalc {

// Planar-diagram text: one X(a,b,c,d) record per crossing (slots counter-
// clockwise from the incoming under-strand), whitespace separated, optional
// sign suffix + or -, optional "loops: n" line for crossing-free components,
// # comments.  Missing signs are inferred from orientation consistency;
// contradictory or ambiguous files are rejected.
PlanarDiagram parse_pd_text(const std::string& text);
std::string render_pd_text(const PlanarDiagram& d);
PlanarDiagram load_pd_file(const std::string& path);

// Braid text: "BR n: w1 w2 ... wk" with nonzero letters |wi| < n, # comments.
BraidWord parse_braid_text(const std::string& text);
std::string render_braid_text(const BraidWord& b);
BraidWord load_braid_file(const std::string& path);

// Annular-tangle text: a PD block whose crossing signs are mandatory,
// followed by boundary lines "L: e1+, e2-, ..." and "R: ...".  Entry i gives
// the edge that meets boundary position i and the strand's direction across
// the annulus (+ left-to-right).
AnnularTangle parse_tangle_text(const std::string& text);
std::string render_tangle_text(const AnnularTangle& t);
AnnularTangle load_tangle_file(const std::string& path);

// Slope-set expressions: a set literal such as "(-8,4] u {0} u [7,inf)", or
// scale(E,r), negate(E), complement(E), union(E,E), intersect(E,E) applied
// recursively.
SlopeSet parse_slope_expression(const std::string& text);

}  // namespace knotcalc
