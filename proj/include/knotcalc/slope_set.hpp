#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcalc/rational.hpp"

namespace knotcalc {

// One rational interval; a missing endpoint means -inf / +inf and is always open.
struct SlopeInterval {
    std::optional<Rational> lo;
    bool lo_closed = false;
    std::optional<Rational> hi;
    bool hi_closed = false;
};

// Canonical finite union of rational intervals and isolated rational points.
// Semantically every set is intersected with Q; endpoints are exact rationals.
class SlopeSet {
public:
    SlopeSet() = default;  // empty set

    static SlopeSet empty() { return SlopeSet(); }
    static SlopeSet all();
    static SlopeSet point(Rational r);
    static SlopeSet interval(std::optional<Rational> lo, bool lo_closed,
                             std::optional<Rational> hi, bool hi_closed);
    static SlopeSet make(std::vector<SlopeInterval> intervals, std::vector<Rational> points);

    const std::vector<SlopeInterval>& intervals() const { return intervals_; }
    const std::vector<Rational>& points() const { return points_; }

    bool is_empty() const { return intervals_.empty() && points_.empty(); }
    bool is_all() const;
    bool member(const Rational& r) const;

    SlopeSet unite(const SlopeSet& o) const;
    SlopeSet intersect(const SlopeSet& o) const;
    SlopeSet complement() const;
    SlopeSet negate() const;
    SlopeSet scale(const Rational& factor) const;  // factor > 0

    // Smallest-|n| nonzero integer n with 1/n in the set, if any.
    std::optional<Integer> reciprocal_integer_member() const;

    bool operator==(const SlopeSet& o) const;
    bool operator!=(const SlopeSet& o) const { return !(*this == o); }

    // "Q", "{}", or pieces joined with " u ": "(-8,4] u {0} u [7,inf)".
    std::string str() const;
    static SlopeSet parse(const std::string& text);

private:
    void normalize();
    std::vector<SlopeInterval> intervals_;
    std::vector<Rational> points_;
};

struct TorusSlopes {
    SlopeSet slo;  // exact
    SlopeSet sl;   // exact
};

// Exact surgery-slope sets for the (p,q) torus knot, |p| > q >= 2, coprime.
TorusSlopes catalog_torus(int p, int q);

enum class SpecialKnot { Trivial, FigureEight };

struct SpecialSlopes {
    SlopeSet slo_lower;
    std::optional<SlopeSet> slo_exact;
    bool slo_contains_all_integers = false;
    std::optional<SlopeSet> sl;  // exact when present (possibly the empty set)
};

SpecialSlopes catalog_special(SpecialKnot k);
SpecialSlopes catalog_twist(int n);  // twist knot with n full twists, n > 1

// True when sl is empty, [2g-1, inf), or (-inf, -(2g-1)].
bool lspace_structure_check(const SlopeSet& sl, int genus);

}  // namespace knotcalc
