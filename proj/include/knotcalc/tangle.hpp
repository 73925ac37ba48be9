#pragma once

#include <utility>
#include <vector>

#include "knotcalc/diagram.hpp"

namespace knotcalc {

// A tangle in a box with k strand ends on the left face and k on the right,
// listed top to bottom. Each boundary entry carries the strand's direction:
// +1 when the strand runs left to right through the box, -1 for right to
// left; the two ends of one strand carry the same direction. Strands must
// join the two faces (no strand returns to its own side, no closed loops
// inside the box). Gluing right face to left face turns the box into an
// annular neighborhood of a braid-like pattern whose axis is the core of the
// complementary solid torus; the winding number of the pattern around that
// axis is the direction sum.
class AnnularTangle {
public:
    using Boundary = std::vector<std::pair<EdgeId, int>>;

    AnnularTangle(std::vector<Crossing> crossings, Boundary left, Boundary right);

    int strand_count() const { return static_cast<int>(left_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Boundary& left() const { return left_; }
    const Boundary& right() const { return right_; }
    // pi[i] = j when a strand joins left position i to right position j.
    const std::vector<int>& through_permutation() const { return through_; }
    int winding() const;
    int crossing_count() const { return static_cast<int>(crossings_.size()); }

    bool operator==(const AnnularTangle& o) const {
        return crossings_ == o.crossings_ && left_ == o.left_ && right_ == o.right_;
    }
    bool operator!=(const AnnularTangle& o) const { return !(*this == o); }

private:
    void validate_and_normalize();

    std::vector<Crossing> crossings_;
    Boundary left_;
    Boundary right_;
    std::vector<int> through_;
};

// p copies of the tangle laid side by side, right face of each glued to the
// left face of the next. Requires matching directions at aligned positions.
AnnularTangle tangle_power(const AnnularTangle& t, int p);

struct AnnularClosure {
    PlanarDiagram diagram;
    int axis_winding = 0;
};
// Glues the right face back to the left face.
AnnularClosure annular_closure(const AnnularTangle& t);

// The braid's strands as a tangle, all running left to right.
AnnularTangle braid_tangle(const BraidWord& b);

// Cuts a knot diagram open along one edge into a one-strand tangle whose
// closure recovers the diagram.
AnnularTangle cut_open(const PlanarDiagram& d, EdgeId e);

// Closure of the tangle together with the axis circle drawn as a ring around
// the seam: every strand crosses the ring twice, passing under its left arc
// and over its right arc (or the reverse). The ring component has no self
// crossings and linking number ±winding with the pattern.
PlanarDiagram axis_closure_diagram(const AnnularTangle& t, bool strand_under_left = true);

}  // namespace knotcalc
