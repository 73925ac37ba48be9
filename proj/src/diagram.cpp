#include "knotcalc/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace knotcalc {

namespace {

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

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw invariant_error("free loop count must be nonnegative");
    for (const Crossing& c : crossings_)
        if (c.sign != 1 && c.sign != -1) throw invariant_error("crossing sign must be +1 or -1");
    validate_and_index();
    canonicalize();
    validate_and_index();
    build_faces();
}

bool PlanarDiagram::slot_is_in(int crossing, int slot) const {
    return slot_in(slot, crossings_.at(crossing).sign);
}

EdgeId PlanarDiagram::next_edge(EdgeId e) const {
    End h = head_of(e);
    return edge_at(h.crossing, out_slot_after(h.slot));
}

int PlanarDiagram::component_of(EdgeId e) const { return component_of_.at(e); }

int PlanarDiagram::writhe() const {
    int w = 0;
    for (const Crossing& c : crossings_) w += c.sign;
    return w;
}

// Builds the edge-end table and traces strand cycles. Rejects diagrams where
// some edge id does not occur exactly once incoming and once outgoing.
void PlanarDiagram::validate_and_index() {
    std::map<EdgeId, std::vector<End>> occ;
    for (int c = 0; c < crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) occ[crossings_[c].edge[s]].push_back(End{c, s});

    std::map<EdgeId, EdgeEnds> ends;
    for (const auto& [e, where] : occ) {
        if (where.size() != 2)
            throw invariant_error("edge " + std::to_string(e) + " must have exactly two ends");
        EdgeEnds ee;
        int ins = 0;
        for (const End& end : where) {
            if (slot_in(end.slot, crossings_[end.crossing].sign)) {
                ee.head = end;
                ++ins;
            } else {
                ee.tail = end;
            }
        }
        if (ins != 1)
            throw invariant_error("edge " + std::to_string(e) +
                                  " must run into exactly one crossing and out of one");
        ends[e] = ee;
    }

    ends_.clear();
    components_.clear();
    component_of_.clear();
    if (!occ.empty()) {
        // After canonicalize() the ids are contiguous; during the first pass
        // over raw input they may not be, so address the table by position.
        std::map<EdgeId, int> dense;
        for (const auto& [e, _] : ends) {
            dense[e] = static_cast<int>(ends_.size());
            ends_.push_back(ends[e]);
        }
        std::vector<bool> seen(ends_.size(), false);
        component_of_.assign(ends_.size(), -1);
        for (const auto& [e, idx] : dense) {
            if (seen[idx]) continue;
            std::vector<EdgeId> cycle;
            EdgeId cur = e;
            while (true) {
                int ci = dense.at(cur);
                if (seen[ci]) break;
                seen[ci] = true;
                component_of_[ci] = static_cast<int>(components_.size());
                cycle.push_back(cur);
                End h = ends.at(cur).head;
                cur = crossings_[h.crossing].edge[out_slot_after(h.slot)];
            }
            components_.push_back(std::move(cycle));
        }
    }
}

// Relabels edges so that equal diagrams get equal crossing lists: edges are
// numbered consecutively along each strand cycle, minimizing the sorted
// crossing list over all component orders and starting edges. Beyond a
// combinatorial budget the exact search degrades to a fixed deterministic
// choice (components by minimal raw id, cycles started at their minimal id).
void PlanarDiagram::canonicalize() {
    if (components_.empty()) {
        crossings_.clear();
        return;
    }
    int k = static_cast<int>(components_.size());
    long long combos = 1;
    for (int i = 2; i <= k; ++i) combos *= i;
    for (const auto& cyc : components_) {
        combos *= static_cast<long long>(cyc.size());
        if (combos > 200000) break;
    }

    auto relabel = [&](const std::vector<int>& order, const std::vector<int>& rot) {
        std::map<EdgeId, EdgeId> newid;
        EdgeId next = 0;
        for (int oi : order) {
            const auto& cyc = components_[oi];
            int n = static_cast<int>(cyc.size());
            for (int t = 0; t < n; ++t) newid[cyc[(rot[oi] + t) % n]] = next++;
        }
        std::vector<Crossing> recs = crossings_;
        for (Crossing& c : recs)
            for (EdgeId& e : c.edge) e = newid.at(e);
        std::sort(recs.begin(), recs.end(), crossing_less);
        return recs;
    };

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Crossing> best;
    if (combos > 200000) {
        std::vector<int> rot(k, 0);
        for (int i = 0; i < k; ++i) {
            const auto& cyc = components_[i];
            rot[i] = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
        }
        best = relabel(order, rot);
    } else {
        bool have = false;
        do {
            std::vector<int> rot(k, 0);
            while (true) {
                std::vector<Crossing> cand = relabel(order, rot);
                if (!have || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(),
                                                          best.end(), crossing_less)) {
                    best = cand;
                    have = true;
                }
                int i = 0;
                for (; i < k; ++i) {
                    rot[i] = (rot[i] + 1) % static_cast<int>(components_[i].size());
                    if (rot[i] != 0) break;
                }
                if (i == k) break;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    crossings_ = std::move(best);
}

// Faces of the sphere embedding: darts are edge ends (crossing, slot), the
// next dart of a face comes from stepping to the other end of the edge and
// turning one slot counterclockwise.
void PlanarDiagram::build_faces() {
    int n = 4 * crossing_count();
    face_of_dart_.assign(n, -1);
    face_count_ = 0;
    auto alpha = [&](int d) {
        int c = d / 4, s = d % 4;
        EdgeId e = crossings_[c].edge[s];
        End t = ends_[e].tail, h = ends_[e].head;
        End other = (t.crossing == c && t.slot == s) ? h : t;
        return 4 * other.crossing + other.slot;
    };
    for (int d0 = 0; d0 < n; ++d0) {
        if (face_of_dart_[d0] != -1) continue;
        int id = face_count_++;
        int d = d0;
        while (face_of_dart_[d] == -1) {
            face_of_dart_[d] = id;
            int a = alpha(d);
            d = 4 * (a / 4) + (a % 4 + 1) % 4;
        }
    }
}

PlanarDiagram mirror(const PlanarDiagram& d) {
    std::vector<Crossing> recs;
    recs.reserve(d.crossings().size());
    for (const Crossing& c : d.crossings()) {
        const auto& e = c.edge;
        if (c.sign > 0)
            recs.push_back(Crossing{{e[3], e[0], e[1], e[2]}, -1});
        else
            recs.push_back(Crossing{{e[1], e[2], e[3], e[0]}, 1});
    }
    return PlanarDiagram(std::move(recs), d.free_loops());
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, EdgeId a, EdgeId b) {
    if (d1.component_count() != 1 || d2.component_count() != 1)
        throw invariant_error("connected sum requires two single-component diagrams");
    if (d1.crossing_count() == 0) return d2;
    if (d2.crossing_count() == 0) return d1;
    if (a < 0 || a >= d1.edge_count()) throw invariant_error("splice edge outside first diagram");
    if (b < 0 || b >= d2.edge_count()) throw invariant_error("splice edge outside second diagram");

    int n1 = d1.crossing_count(), e1 = d1.edge_count(), e2 = d2.edge_count();
    std::vector<Crossing> recs = d1.crossings();
    for (const Crossing& c : d2.crossings()) {
        Crossing shifted = c;
        for (EdgeId& e : shifted.edge) e += e1;
        recs.push_back(shifted);
    }
    EdgeId x = e1 + e2, y = e1 + e2 + 1;
    PlanarDiagram::End ta = d1.tail_of(a), ha = d1.head_of(a);
    PlanarDiagram::End tb = d2.tail_of(b), hb = d2.head_of(b);
    recs[ta.crossing].edge[ta.slot] = x;
    recs[n1 + hb.crossing].edge[hb.slot] = x;
    recs[n1 + tb.crossing].edge[tb.slot] = y;
    recs[ha.crossing].edge[ha.slot] = y;
    return PlanarDiagram(std::move(recs), 0);
}

PlanarDiagram disjoint_union(const PlanarDiagram& d1, const PlanarDiagram& d2) {
    int e1 = d1.edge_count();
    std::vector<Crossing> recs = d1.crossings();
    for (const Crossing& c : d2.crossings()) {
        Crossing shifted = c;
        for (EdgeId& e : shifted.edge) e += e1;
        recs.push_back(shifted);
    }
    return PlanarDiagram(std::move(recs), d1.free_loops() + d2.free_loops());
}

namespace {

// Components of the strands at a crossing: under-strand owns slots 0/2, the
// over-strand slots 1/3.
std::pair<int, int> strand_components(const PlanarDiagram& d, const Crossing& c) {
    return {d.component_of(c.edge[0]), d.component_of(c.edge[1])};
}

}  // namespace

int linking_number(const PlanarDiagram& d, int comp_a, int comp_b) {
    if (comp_a == comp_b) throw invariant_error("linking number needs two distinct components");
    int total = 0;
    for (const Crossing& c : d.crossings()) {
        auto [u, o] = strand_components(d, c);
        if ((u == comp_a && o == comp_b) || (u == comp_b && o == comp_a)) total += c.sign;
    }
    if (total % 2 != 0) throw invariant_error("crossing signs between components must pair up");
    return total / 2;
}

int self_crossing_count(const PlanarDiagram& d, int comp) {
    int total = 0;
    for (const Crossing& c : d.crossings()) {
        auto [u, o] = strand_components(d, c);
        if (u == comp && o == comp) ++total;
    }
    return total;
}

PlanarDiagram extract_component(const PlanarDiagram& d, int comp) {
    if (comp < 0 || comp >= d.component_count()) throw invariant_error("no such component");
    if (comp >= static_cast<int>(d.components().size())) return PlanarDiagram::unknot(1);

    std::vector<EdgeId> parent(d.edge_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](EdgeId e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    };
    std::vector<Crossing> kept;
    for (const Crossing& c : d.crossings()) {
        auto [u, o] = strand_components(d, c);
        if (u == comp && o == comp) {
            kept.push_back(c);
        } else if (u == comp) {
            parent[find(c.edge[0])] = find(c.edge[2]);
        } else if (o == comp) {
            parent[find(c.edge[1])] = find(c.edge[3]);
        }
    }
    if (kept.empty()) return PlanarDiagram::unknot(1);
    for (Crossing& c : kept)
        for (EdgeId& e : c.edge) e = find(e);
    return PlanarDiagram(std::move(kept), 0);
}

namespace {

// Crossings as vertices, edges as adjacencies; loops are irrelevant for
// connectivity. Returns the number of connected pieces among the crossings,
// ignoring the edge pairs listed in `skip`.
int graph_components(const PlanarDiagram& d, EdgeId skip1 = -1, EdgeId skip2 = -1) {
    int n = d.crossing_count();
    if (n == 0) return 0;
    std::vector<std::vector<int>> adj(n);
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
        if (e == skip1 || e == skip2) continue;
        int a = d.tail_of(e).crossing, b = d.head_of(e).crossing;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(n, false);
    int pieces = 0;
    for (int v0 = 0; v0 < n; ++v0) {
        if (seen[v0]) continue;
        ++pieces;
        std::vector<int> stack{v0};
        seen[v0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return pieces;
}

bool has_nugatory_crossing(const PlanarDiagram& d) {
    for (int c = 0; c < d.crossing_count(); ++c)
        if (d.face_of_corner(c, 0) == d.face_of_corner(c, 2) ||
            d.face_of_corner(c, 1) == d.face_of_corner(c, 3))
            return true;
    return false;
}

// A face bounded by exactly two edges between two distinct crossings where one
// edge passes over at both ends and the other under at both ends; such a bigon
// untwists by sliding one strand off the other.
bool has_untwistable_bigon(const PlanarDiagram& d) {
    std::vector<std::vector<int>> darts_by_face(d.face_count());
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) darts_by_face[d.face_of_dart(c, s)].push_back(4 * c + s);
    for (const auto& darts : darts_by_face) {
        if (darts.size() != 2) continue;
        int c1 = darts[0] / 4, s1 = darts[0] % 4;
        int c2 = darts[1] / 4, s2 = darts[1] % 4;
        if (c1 == c2) continue;
        EdgeId f = d.edge_at(c1, s1), g = d.edge_at(c2, s2);
        if (f == g) continue;
        auto both_over = [&](EdgeId e) {
            return PlanarDiagram::slot_is_over(d.tail_of(e).slot) &&
                   PlanarDiagram::slot_is_over(d.head_of(e).slot);
        };
        auto both_under = [&](EdgeId e) {
            return !PlanarDiagram::slot_is_over(d.tail_of(e).slot) &&
                   !PlanarDiagram::slot_is_over(d.head_of(e).slot);
        };
        if ((both_over(f) && both_under(g)) || (both_under(f) && both_over(g))) return true;
    }
    return false;
}

}  // namespace

DiagramPredicates diagram_predicates(const PlanarDiagram& d) {
    DiagramPredicates p;
    p.writhe = d.writhe();
    p.component_count = d.component_count();
    p.crossing_count = d.crossing_count();

    p.alternating = true;
    for (EdgeId e = 0; e < d.edge_count(); ++e)
        if (PlanarDiagram::slot_is_over(d.tail_of(e).slot) ==
            PlanarDiagram::slot_is_over(d.head_of(e).slot))
            p.alternating = false;

    p.positive = true;
    p.negative = true;
    for (const Crossing& c : d.crossings()) {
        if (c.sign > 0) p.negative = false;
        if (c.sign < 0) p.positive = false;
    }

    p.reduced = !has_nugatory_crossing(d) && !has_untwistable_bigon(d);
    p.nonsplit = graph_components(d) + d.free_loops() <= 1;

    p.prime_diagram = p.nonsplit && d.crossing_count() >= 1;
    if (p.prime_diagram) {
        for (EdgeId f = 0; f < d.edge_count() && p.prime_diagram; ++f) {
            if (d.tail_of(f).crossing == d.head_of(f).crossing) continue;
            for (EdgeId g = f + 1; g < d.edge_count() && p.prime_diagram; ++g) {
                if (d.tail_of(g).crossing == d.head_of(g).crossing) continue;
                if (graph_components(d, f, g) > 1) p.prime_diagram = false;
            }
        }
    }
    return p;
}

PlanarDiagram thread_circle(const PlanarDiagram& d, const std::vector<RingStep>& steps) {
    if (steps.empty()) throw invariant_error("a threaded circle must cross at least one edge");
    int m = static_cast<int>(steps.size());
    std::map<EdgeId, int> cuts_per_edge;
    for (const RingStep& s : steps) {
        if (s.edge < 0 || s.edge >= d.edge_count())
            throw invariant_error("threaded circle crosses a missing edge");
        ++cuts_per_edge[s.edge];
    }

    // Pieces of a cut edge keep the original id for the tail piece and take
    // fresh ids toward the head; ring edges follow.
    EdgeId next_id = d.edge_count();
    std::map<EdgeId, std::vector<EdgeId>> pieces;
    std::vector<Crossing> recs = d.crossings();
    for (const auto& [e, q] : cuts_per_edge) {
        std::vector<EdgeId>& p = pieces[e];
        p.push_back(e);
        for (int i = 0; i < q; ++i) p.push_back(next_id++);
        PlanarDiagram::End h = d.head_of(e);
        recs[h.crossing].edge[h.slot] = p.back();
    }
    std::vector<EdgeId> ring(m);
    for (int j = 0; j < m; ++j) ring[j] = next_id++;

    std::map<EdgeId, std::set<int>> seen_cut_indices;
    for (int j = 0; j < m; ++j) {
        const RingStep& s = steps[j];
        int q = cuts_per_edge[s.edge];
        if (s.cut_index < 0 || s.cut_index >= q || !seen_cut_indices[s.edge].insert(s.cut_index).second)
            throw invariant_error("cut positions along an edge must be 0..k-1, each used once");
        EdgeId ea = pieces[s.edge][s.cut_index];
        EdgeId eb = pieces[s.edge][s.cut_index + 1];
        EdgeId rin = ring[(j + m - 1) % m], rout = ring[j];
        if (s.from_right) {
            if (s.ring_over)
                recs.push_back(Crossing{{ea, rin, eb, rout}, -1});
            else
                recs.push_back(Crossing{{rin, eb, rout, ea}, 1});
        } else {
            if (s.ring_over)
                recs.push_back(Crossing{{ea, rout, eb, rin}, 1});
            else
                recs.push_back(Crossing{{rin, ea, rout, eb}, -1});
        }
    }

    PlanarDiagram out(std::move(recs), d.free_loops());
    if (graph_components(out) + out.free_loops() != 1)
        throw invariant_error("threaded circle must leave the diagram connected");
    if (out.crossing_count() - out.edge_count() + out.face_count() != 2)
        throw invariant_error("threaded circle does not embed in the plane");
    return out;
}

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (strands < 1) throw invariant_error("a braid needs at least one strand");
    for (int l : letters)
        if (l == 0 || std::abs(l) >= strands)
            throw invariant_error("braid letter " + std::to_string(l) + " outside 1.." +
                                  std::to_string(strands - 1));
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> occ(strands);
    std::iota(occ.begin(), occ.end(), 0);
    for (int l : letters) {
        int i = std::abs(l) - 1;
        std::swap(occ[i], occ[i + 1]);
    }
    std::vector<int> perm(strands);
    for (int q = 0; q < strands; ++q) perm[occ[q]] = q;
    return perm;
}

int BraidWord::cycle_count() const {
    std::vector<int> perm = permutation();
    std::vector<bool> seen(strands, false);
    int cycles = 0;
    for (int s = 0; s < strands; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return cycles;
}

PlanarDiagram braid_closure(const BraidWord& b) {
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

    std::vector<EdgeId> parent(next_id);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](EdgeId e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    };
    for (int j = 0; j < b.strands; ++j) parent[find(cur[j])] = find(j);
    for (Crossing& c : recs)
        for (EdgeId& e : c.edge) e = find(e);

    std::set<EdgeId> used;
    for (const Crossing& c : recs) used.insert(c.edge.begin(), c.edge.end());
    std::set<EdgeId> idle;
    for (int j = 0; j < b.strands; ++j) {
        EdgeId r = find(j);
        if (!used.count(r)) idle.insert(r);
    }
    return PlanarDiagram(std::move(recs), static_cast<int>(idle.size()));
}

}  // namespace knotcalc
