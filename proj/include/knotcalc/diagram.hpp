#pragma once

#include <array>
#include <optional>
#include <vector>

#include "knotcalc/errors.hpp"

namespace knotcalc {

using EdgeId = int;

// One crossing of a planar diagram. The four incident edges are listed
// counterclockwise starting from the incoming under-strand:
//   slot 0: under-strand in        slot 2: under-strand out
//   sign +1: over-strand runs edge[3] -> edge[1]
//   sign -1: over-strand runs edge[1] -> edge[3]
struct Crossing {
    std::array<EdgeId, 4> edge;
    int sign = 1;
    bool operator==(const Crossing&) const = default;
};

// Oriented link diagram as a list of crossings plus crossing-free loop
// components. Construction validates the edge pairing (every edge id occurs
// exactly twice, once incoming and once outgoing) and relabels edges into a
// canonical traversal order, so equality is syntactic.
class PlanarDiagram {
public:
    PlanarDiagram() = default;
    explicit PlanarDiagram(std::vector<Crossing> crossings, int free_loops = 0);
    static PlanarDiagram unknot(int free_loops = 1) { return PlanarDiagram({}, free_loops); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int free_loops() const { return free_loops_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return static_cast<int>(ends_.size()); }
    int component_count() const { return static_cast<int>(components_.size()) + free_loops_; }
    // Edge cycles in traversal order, one per component with crossings.
    const std::vector<std::vector<EdgeId>>& components() const { return components_; }
    int component_of(EdgeId e) const;
    int writhe() const;

    struct End {
        int crossing = -1;
        int slot = -1;
    };
    End tail_of(EdgeId e) const { return ends_.at(e).tail; }
    End head_of(EdgeId e) const { return ends_.at(e).head; }
    EdgeId edge_at(int crossing, int slot) const { return crossings_.at(crossing).edge.at(slot); }
    // True when the slot receives its edge (strand runs into the crossing there).
    bool slot_is_in(int crossing, int slot) const;
    // True when the slot belongs to the over-strand.
    static bool slot_is_over(int slot) { return slot == 1 || slot == 3; }
    EdgeId next_edge(EdgeId e) const;  // follow the strand through the head crossing

    // Faces of the associated combinatorial map (sphere embedding). A dart is
    // an edge end (crossing, slot); corner k of a crossing is the quadrant
    // between slots k and k+1.
    int face_count() const { return face_count_; }
    int face_of_dart(int crossing, int slot) const { return face_of_dart_[4 * crossing + slot]; }
    int face_of_corner(int crossing, int k) const { return face_of_dart(crossing, (k + 1) % 4); }

    bool operator==(const PlanarDiagram& o) const {
        return crossings_ == o.crossings_ && free_loops_ == o.free_loops_;
    }
    bool operator!=(const PlanarDiagram& o) const { return !(*this == o); }

private:
    void validate_and_index();
    void canonicalize();
    void build_faces();

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;

    struct EdgeEnds {
        End tail;
        End head;
    };
    std::vector<EdgeEnds> ends_;
    std::vector<std::vector<EdgeId>> components_;
    std::vector<int> component_of_;
    int face_count_ = 0;
    std::vector<int> face_of_dart_;
};

PlanarDiagram mirror(const PlanarDiagram& d);
// Orientation-respecting band sum splicing edge a of d1 to edge b of d2.
// Both diagrams must be knots (single component).
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, EdgeId a, EdgeId b);
PlanarDiagram disjoint_union(const PlanarDiagram& d1, const PlanarDiagram& d2);
// Half the signed count of crossings between the two components.
int linking_number(const PlanarDiagram& d, int comp_a, int comp_b);
// Self-crossing count of one component.
int self_crossing_count(const PlanarDiagram& d, int comp);
// Diagram of a single component; crossings with other components are smoothed away.
PlanarDiagram extract_component(const PlanarDiagram& d, int comp);

struct DiagramPredicates {
    bool alternating = false;
    bool reduced = false;
    bool positive = false;
    bool negative = false;
    bool nonsplit = false;
    bool prime_diagram = false;
    int writhe = 0;
    int component_count = 0;
    int crossing_count = 0;
};
DiagramPredicates diagram_predicates(const PlanarDiagram& d);

// Threads a new unknotted circle component through the diagram. Step j cuts
// the named edge (cut_index orders multiple cuts along one edge from its tail)
// and crosses it with the ring passing over or under; from_right says the ring
// runs right-to-left as seen along the edge's orientation. The caller is
// responsible for choosing steps that embed in the plane; the result is
// validated against the Euler formula, so impossible wirings are rejected.
struct RingStep {
    EdgeId edge;
    int cut_index = 0;
    bool ring_over = false;
    bool from_right = true;
};
PlanarDiagram thread_circle(const PlanarDiagram& d, const std::vector<RingStep>& steps);

// Braid words on `strands` strands; letter i in [1, strands-1] crosses the
// strands at positions i, i+1 with the strand entering at position i+1 passing
// over; negative letters are the inverses.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;

    BraidWord(int n, std::vector<int> w);
    std::vector<int> permutation() const;  // 0-based positions, top to bottom
    int cycle_count() const;
};

PlanarDiagram braid_closure(const BraidWord& b);

}  // namespace knotcalc
