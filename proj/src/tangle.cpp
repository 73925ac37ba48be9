#include "knotcalc/tangle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace knotcalc {

namespace {

struct Occurrence {
    bool at_boundary = false;
    int crossing = -1;
    int slot = -1;
    int side = 0;  // 0 = left, 1 = right
    int index = -1;
};

bool slot_in(int slot, int sign) {
    switch (slot) {
        case 0: return true;
        case 2: return false;
        case 1: return sign < 0;
        case 3: return sign > 0;
        default: throw invariant_error("crossing slot out of range");
    }
}

int out_slot_after(int in_slot) {
    switch (in_slot) {
        case 0: return 2;
        case 1: return 3;
        case 3: return 1;
        default: throw invariant_error("strand cannot enter at an out slot");
    }
}

bool crossing_less(const Crossing& a, const Crossing& b) {
    return std::tie(a.edge[0], a.edge[1], a.edge[2], a.edge[3], a.sign) <
           std::tie(b.edge[0], b.edge[1], b.edge[2], b.edge[3], b.sign);
}

}  // namespace

AnnularTangle::AnnularTangle(std::vector<Crossing> crossings, Boundary left, Boundary right)
    : crossings_(std::move(crossings)), left_(std::move(left)), right_(std::move(right)) {
    validate_and_normalize();
}

int AnnularTangle::winding() const {
    int w = 0;
    for (const auto& [e, sign] : left_) w += sign;
    return w;
}

void AnnularTangle::validate_and_normalize() {
    int k = static_cast<int>(left_.size());
    if (k < 1 || static_cast<int>(right_.size()) != k)
        throw invariant_error("tangle boundaries must list the same positive number of strands");
    for (const Crossing& c : crossings_)
        if (c.sign != 1 && c.sign != -1) throw invariant_error("crossing sign must be +1 or -1");
    for (const auto& side : {left_, right_})
        for (const auto& [e, sign] : side)
            if (sign != 1 && sign != -1)
                throw invariant_error("strand direction must be +1 or -1");

    // Each edge gets exactly two ends, one where the strand starts (tail) and
    // one where it ends (head); a boundary mention is an end, incoming to the
    // box when the direction points away from that face.
    std::map<EdgeId, std::vector<std::pair<Occurrence, bool>>> occ;  // bool: is head
    for (int c = 0; c < crossing_count(); ++c)
        for (int s = 0; s < 4; ++s)
            occ[crossings_[c].edge[s]].push_back(
                {Occurrence{false, c, s, 0, -1}, slot_in(s, crossings_[c].sign)});
    for (int i = 0; i < k; ++i) {
        occ[left_[i].first].push_back({Occurrence{true, -1, -1, 0, i}, left_[i].second < 0});
        occ[right_[i].first].push_back({Occurrence{true, -1, -1, 1, i}, right_[i].second > 0});
    }
    std::map<EdgeId, Occurrence> head_of, tail_of;
    for (const auto& [e, ends] : occ) {
        if (ends.size() != 2)
            throw invariant_error("edge " + std::to_string(e) + " must have exactly two ends");
        int heads = 0;
        for (const auto& [where, is_head] : ends) {
            if (is_head) {
                head_of[e] = where;
                ++heads;
            } else {
                tail_of[e] = where;
            }
        }
        if (heads != 1)
            throw invariant_error("edge " + std::to_string(e) +
                                  " must have exactly one start and one end");
    }

    // Trace each strand from its incoming boundary end; it must leave through
    // the opposite face with the same direction, and together the strands
    // must use up every edge.
    through_.assign(k, -1);
    std::vector<std::vector<EdgeId>> strand_edges(k);
    std::set<EdgeId> visited;
    auto trace = [&](bool from_left, int start) {
        EdgeId cur = from_left ? left_[start].first : right_[start].first;
        int sign = from_left ? left_[start].second : right_[start].second;
        std::vector<EdgeId> run;
        while (true) {
            run.push_back(cur);
            if (!visited.insert(cur).second)
                throw invariant_error("strands may not share an edge");
            Occurrence h = head_of.at(cur);
            if (h.at_boundary) {
                if ((h.side == 0) == from_left)
                    throw invariant_error("strand returns to the face it entered from");
                int li = from_left ? start : h.index;
                int ri = from_left ? h.index : start;
                if (left_[li].second != sign || right_[ri].second != sign)
                    throw invariant_error("strand direction differs at its two ends");
                if (through_[li] != -1)
                    throw invariant_error("two strands claim the same boundary position");
                through_[li] = ri;
                strand_edges[li] = std::move(run);
                break;
            }
            cur = crossings_[h.crossing].edge[out_slot_after(h.slot)];
        }
    };
    for (int i = 0; i < k; ++i)
        if (left_[i].second > 0) trace(true, i);
    for (int i = 0; i < k; ++i)
        if (right_[i].second < 0) trace(false, i);
    for (int i = 0; i < k; ++i)
        if (through_[i] == -1) throw invariant_error("boundary strands fail to match up");
    if (visited.size() != occ.size())
        throw invariant_error("tangle contains a closed component");

    // Canonical labels: follow strands in left-to-right boundary order,
    // numbering edges along the flow, then sort the crossing list.
    std::map<EdgeId, EdgeId> newid;
    EdgeId next = 0;
    for (int i = 0; i < k; ++i)
        for (EdgeId e : strand_edges[i]) newid[e] = next++;
    for (Crossing& c : crossings_)
        for (EdgeId& e : c.edge) e = newid.at(e);
    for (auto& [e, sign] : left_) e = newid.at(e);
    for (auto& [e, sign] : right_) e = newid.at(e);
    std::sort(crossings_.begin(), crossings_.end(), crossing_less);
}

AnnularTangle tangle_power(const AnnularTangle& t, int p) {
    if (p < 1) throw invariant_error("tangle power wants a positive exponent");
    int k = t.strand_count();
    for (int i = 0; i < k; ++i)
        if (t.left()[i].second != t.right()[i].second)
            throw invariant_error("tangle is not self-composable: directions differ at position " +
                                  std::to_string(i));

    int stride = 0;
    for (const Crossing& c : t.crossings())
        for (EdgeId e : c.edge) stride = std::max(stride, e + 1);
    for (const auto& side : {t.left(), t.right()})
        for (const auto& [e, sign] : side) stride = std::max(stride, e + 1);

    std::vector<EdgeId> parent(static_cast<size_t>(stride) * p);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](EdgeId e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    };
    for (int c = 0; c + 1 < p; ++c)
        for (int i = 0; i < k; ++i)
            parent[find(c * stride + t.right()[i].first)] =
                find((c + 1) * stride + t.left()[i].first);

    std::vector<Crossing> recs;
    for (int c = 0; c < p; ++c)
        for (Crossing cr : t.crossings()) {
            for (EdgeId& e : cr.edge) e = find(c * stride + e);
            recs.push_back(cr);
        }
    AnnularTangle::Boundary left, right;
    for (int i = 0; i < k; ++i) {
        left.emplace_back(find(t.left()[i].first), t.left()[i].second);
        right.emplace_back(find((p - 1) * stride + t.right()[i].first), t.right()[i].second);
    }
    return AnnularTangle(std::move(recs), std::move(left), std::move(right));
}

AnnularClosure annular_closure(const AnnularTangle& t) {
    int k = t.strand_count();
    for (int i = 0; i < k; ++i)
        if (t.left()[i].second != t.right()[i].second)
            throw invariant_error("closure needs matching strand directions at position " +
                                  std::to_string(i));

    int n_edges = 0;
    for (const Crossing& c : t.crossings())
        for (EdgeId e : c.edge) n_edges = std::max(n_edges, e + 1);
    for (const auto& side : {t.left(), t.right()})
        for (const auto& [e, sign] : side) n_edges = std::max(n_edges, e + 1);

    std::vector<EdgeId> parent(n_edges);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](EdgeId e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    };
    for (int i = 0; i < k; ++i) parent[find(t.right()[i].first)] = find(t.left()[i].first);

    std::vector<Crossing> recs = t.crossings();
    std::set<EdgeId> used;
    for (Crossing& c : recs)
        for (EdgeId& e : c.edge) {
            e = find(e);
            used.insert(e);
        }
    std::set<EdgeId> idle;
    for (int i = 0; i < k; ++i) {
        EdgeId r = find(t.left()[i].first);
        if (!used.count(r)) idle.insert(r);
    }
    return AnnularClosure{PlanarDiagram(std::move(recs), static_cast<int>(idle.size())),
                          t.winding()};
}

AnnularTangle braid_tangle(const BraidWord& b) {
    std::vector<EdgeId> cur(b.strands);
    std::iota(cur.begin(), cur.end(), 0);
    EdgeId next_id = b.strands;
    std::vector<Crossing> recs;
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        EdgeId a = cur[i], bb = cur[i + 1];
        EdgeId o1 = next_id++, o2 = next_id++;
        if (l > 0)
            recs.push_back(Crossing{{a, o1, o2, bb}, 1});
        else
            recs.push_back(Crossing{{bb, a, o1, o2}, -1});
        cur[i] = o1;
        cur[i + 1] = o2;
    }
    AnnularTangle::Boundary left, right;
    for (int j = 0; j < b.strands; ++j) {
        left.emplace_back(j, 1);
        right.emplace_back(cur[j], 1);
    }
    return AnnularTangle(std::move(recs), std::move(left), std::move(right));
}

AnnularTangle cut_open(const PlanarDiagram& d, EdgeId e) {
    if (d.component_count() != 1) throw invariant_error("cut open expects a knot diagram");
    if (d.crossing_count() == 0)
        return AnnularTangle({}, {{0, 1}}, {{0, 1}});
    if (e < 0 || e >= d.edge_count()) throw invariant_error("no such edge to cut");

    EdgeId fresh = d.edge_count();
    std::vector<Crossing> recs = d.crossings();
    PlanarDiagram::End h = d.head_of(e);
    recs[h.crossing].edge[h.slot] = fresh;
    return AnnularTangle(std::move(recs), {{fresh, 1}}, {{e, 1}});
}

PlanarDiagram axis_closure_diagram(const AnnularTangle& t, bool strand_under_left) {
    int k = t.strand_count();
    for (int i = 0; i < k; ++i)
        if (t.left()[i].second != t.right()[i].second)
            throw invariant_error("closure needs matching strand directions at position " +
                                  std::to_string(i));

    int base = 0;
    for (const Crossing& c : t.crossings())
        for (EdgeId e : c.edge) base = std::max(base, e + 1);
    for (const auto& side : {t.left(), t.right()})
        for (const auto& [e, sign] : side) base = std::max(base, e + 1);

    // Strand i crosses the ring twice at the seam: ring edges g run down the
    // left arc (between seam positions) and back up the right arc; m[i] is
    // the strand segment between its two ring crossings.
    auto m = [&](int i) { return base + i; };
    auto g = [&](int j) { return base + k + ((j % (2 * k)) + 2 * k) % (2 * k); };

    std::vector<Crossing> recs = t.crossings();
    for (int i = 0; i < k; ++i) {
        int dir = t.left()[i].second;
        EdgeId out_e = dir > 0 ? t.right()[i].first : t.left()[i].first;
        EdgeId in_e = dir > 0 ? t.left()[i].first : t.right()[i].first;
        EdgeId la_in = g(i), la_out = g(i + 1);          // left arc runs downward
        EdgeId ra_in = g(2 * k - i - 1), ra_out = g(2 * k - i);  // right arc runs upward
        if (strand_under_left) {
            if (dir > 0) {
                recs.push_back(Crossing{{out_e, la_out, m(i), la_in}, 1});
                recs.push_back(Crossing{{ra_in, in_e, ra_out, m(i)}, 1});
            } else {
                recs.push_back(Crossing{{m(i), la_in, in_e, la_out}, -1});
                recs.push_back(Crossing{{ra_in, out_e, ra_out, m(i)}, -1});
            }
        } else {
            if (dir > 0) {
                recs.push_back(Crossing{{la_in, out_e, la_out, m(i)}, -1});
                recs.push_back(Crossing{{m(i), ra_in, in_e, ra_out}, -1});
            } else {
                recs.push_back(Crossing{{la_in, in_e, la_out, m(i)}, 1});
                recs.push_back(Crossing{{out_e, ra_out, m(i), ra_in}, 1});
            }
        }
    }
    return PlanarDiagram(std::move(recs), 0);
}

}  // namespace knotcalc
