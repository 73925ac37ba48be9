#include "knotcalc/slope_set.hpp"

#include <algorithm>
#include <sstream>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

// Lower-end order: -inf first; at equal values a closed end reaches further left.
bool lo_before(const SlopeInterval& a, const SlopeInterval& b) {
    if (!a.lo) return true;
    if (!b.lo) return false;
    if (*a.lo != *b.lo) return *a.lo < *b.lo;
    return a.lo_closed && !b.lo_closed;
}

// True when b starts inside or immediately at the end of a (union is one interval).
bool touches(const SlopeInterval& a, const SlopeInterval& b) {
    if (!a.hi || !b.lo) return true;
    if (*b.lo < *a.hi) return true;
    if (*b.lo > *a.hi) return false;
    return a.hi_closed || b.lo_closed;
}

// Upper-end maximum for merging.
void extend_hi(SlopeInterval& a, const SlopeInterval& b) {
    if (!a.hi) return;
    if (!b.hi) {
        a.hi.reset();
        a.hi_closed = false;
        return;
    }
    if (*b.hi > *a.hi || (*b.hi == *a.hi && b.hi_closed)) {
        a.hi = b.hi;
        a.hi_closed = b.hi_closed;
    }
}

bool interval_member(const SlopeInterval& iv, const Rational& r) {
    if (iv.lo) {
        if (r < *iv.lo) return false;
        if (r == *iv.lo && !iv.lo_closed) return false;
    }
    if (iv.hi) {
        if (r > *iv.hi) return false;
        if (r == *iv.hi && !iv.hi_closed) return false;
    }
    return true;
}

}  // namespace

void SlopeSet::normalize() {
    std::vector<SlopeInterval> ivs;
    for (auto& iv : intervals_) {
        if ((!iv.lo && iv.lo_closed) || (!iv.hi && iv.hi_closed))
            throw invariant_error("infinite endpoints must be open");
        if (iv.lo && iv.hi) {
            if (*iv.lo > *iv.hi) throw invariant_error("interval with lo > hi");
            if (*iv.lo == *iv.hi) {
                if (iv.lo_closed && iv.hi_closed) points_.push_back(*iv.lo);
                continue;  // degenerate: a point or empty
            }
        }
        ivs.push_back(std::move(iv));
    }
    std::sort(ivs.begin(), ivs.end(), lo_before);

    auto merge_pass = [&]() {
        std::vector<SlopeInterval> merged;
        for (auto& iv : ivs) {
            if (!merged.empty() && touches(merged.back(), iv))
                extend_hi(merged.back(), iv);
            else
                merged.push_back(iv);
        }
        ivs = std::move(merged);
    };
    merge_pass();

    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());

    // Absorb points sitting on open endpoints, then re-merge; repeat to fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Rational> keep;
        for (const auto& q : points_) {
            bool absorbed = false;
            for (auto& iv : ivs) {
                if (interval_member(iv, q)) {
                    absorbed = true;
                    break;
                }
                if (iv.lo && *iv.lo == q && !iv.lo_closed) {
                    iv.lo_closed = true;
                    absorbed = true;
                    break;
                }
                if (iv.hi && *iv.hi == q && !iv.hi_closed) {
                    iv.hi_closed = true;
                    absorbed = true;
                    break;
                }
            }
            if (absorbed)
                changed = true;
            else
                keep.push_back(q);
        }
        points_ = std::move(keep);
        if (changed) {
            std::sort(ivs.begin(), ivs.end(), lo_before);
            merge_pass();
        }
    }
    intervals_ = std::move(ivs);
}

SlopeSet SlopeSet::all() {
    SlopeSet s;
    s.intervals_.push_back(SlopeInterval{});
    return s;
}

SlopeSet SlopeSet::point(Rational r) {
    SlopeSet s;
    s.points_.push_back(std::move(r));
    return s;
}

SlopeSet SlopeSet::interval(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi,
                            bool hi_closed) {
    SlopeSet s;
    s.intervals_.push_back(SlopeInterval{std::move(lo), lo_closed, std::move(hi), hi_closed});
    s.normalize();
    return s;
}

SlopeSet SlopeSet::make(std::vector<SlopeInterval> intervals, std::vector<Rational> points) {
    SlopeSet s;
    s.intervals_ = std::move(intervals);
    s.points_ = std::move(points);
    s.normalize();
    return s;
}

bool SlopeSet::is_all() const {
    return points_.empty() && intervals_.size() == 1 && !intervals_[0].lo && !intervals_[0].hi;
}

bool SlopeSet::member(const Rational& r) const {
    for (const auto& iv : intervals_)
        if (interval_member(iv, r)) return true;
    for (const auto& q : points_)
        if (q == r) return true;
    return false;
}

SlopeSet SlopeSet::unite(const SlopeSet& o) const {
    std::vector<SlopeInterval> ivs = intervals_;
    ivs.insert(ivs.end(), o.intervals_.begin(), o.intervals_.end());
    std::vector<Rational> pts = points_;
    pts.insert(pts.end(), o.points_.begin(), o.points_.end());
    return make(std::move(ivs), std::move(pts));
}

SlopeSet SlopeSet::intersect(const SlopeSet& o) const {
    std::vector<SlopeInterval> ivs;
    std::vector<Rational> pts;
    for (const auto& a : intervals_) {
        for (const auto& b : o.intervals_) {
            SlopeInterval k;
            // larger lower end
            if (!a.lo) {
                k.lo = b.lo;
                k.lo_closed = b.lo_closed;
            } else if (!b.lo) {
                k.lo = a.lo;
                k.lo_closed = a.lo_closed;
            } else if (*a.lo > *b.lo) {
                k.lo = a.lo;
                k.lo_closed = a.lo_closed;
            } else if (*b.lo > *a.lo) {
                k.lo = b.lo;
                k.lo_closed = b.lo_closed;
            } else {
                k.lo = a.lo;
                k.lo_closed = a.lo_closed && b.lo_closed;
            }
            // smaller upper end
            if (!a.hi) {
                k.hi = b.hi;
                k.hi_closed = b.hi_closed;
            } else if (!b.hi) {
                k.hi = a.hi;
                k.hi_closed = a.hi_closed;
            } else if (*a.hi < *b.hi) {
                k.hi = a.hi;
                k.hi_closed = a.hi_closed;
            } else if (*b.hi < *a.hi) {
                k.hi = b.hi;
                k.hi_closed = b.hi_closed;
            } else {
                k.hi = a.hi;
                k.hi_closed = a.hi_closed && b.hi_closed;
            }
            if (k.lo && k.hi && *k.lo > *k.hi) continue;
            if (k.lo && k.hi && *k.lo == *k.hi && !(k.lo_closed && k.hi_closed)) continue;
            ivs.push_back(std::move(k));
        }
    }
    for (const auto& q : points_)
        if (o.member(q)) pts.push_back(q);
    for (const auto& q : o.points_)
        if (member(q)) pts.push_back(q);
    return make(std::move(ivs), std::move(pts));
}

SlopeSet SlopeSet::complement() const {
    // Walk the canonical pieces in order; emit the gaps with flipped closure.
    struct Piece {
        std::optional<Rational> lo;
        bool lo_closed;
        std::optional<Rational> hi;
        bool hi_closed;
    };
    std::vector<Piece> pieces;
    for (const auto& iv : intervals_) pieces.push_back({iv.lo, iv.lo_closed, iv.hi, iv.hi_closed});
    for (const auto& q : points_) pieces.push_back({q, true, q, true});
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (!a.lo) return true;
        if (!b.lo) return false;
        return *a.lo < *b.lo;
    });

    std::vector<SlopeInterval> gaps;
    std::optional<Rational> cur;  // -inf
    bool cur_closed = false;
    bool open_ended = false;
    for (const auto& p : pieces) {
        if (p.lo) gaps.push_back(SlopeInterval{cur, cur_closed, p.lo, !p.lo_closed});
        if (!p.hi) {
            open_ended = true;
            break;
        }
        cur = p.hi;
        cur_closed = !p.hi_closed;
    }
    if (!open_ended) gaps.push_back(SlopeInterval{cur, cur_closed, std::nullopt, false});

    // Degenerate closed-closed gaps become isolated points during normalization.
    std::vector<SlopeInterval> ivs;
    std::vector<Rational> pts;
    for (auto& g : gaps) {
        if (g.lo && g.hi && *g.lo == *g.hi) {
            if (g.lo_closed && g.hi_closed) pts.push_back(*g.lo);
            continue;
        }
        if (g.lo && g.hi && *g.lo > *g.hi) continue;
        ivs.push_back(std::move(g));
    }
    return make(std::move(ivs), std::move(pts));
}

SlopeSet SlopeSet::negate() const {
    std::vector<SlopeInterval> ivs;
    for (const auto& iv : intervals_) {
        SlopeInterval n;
        if (iv.hi) n.lo = -*iv.hi;
        n.lo_closed = iv.hi_closed;
        if (iv.lo) n.hi = -*iv.lo;
        n.hi_closed = iv.lo_closed;
        ivs.push_back(std::move(n));
    }
    std::vector<Rational> pts;
    for (const auto& q : points_) pts.push_back(-q);
    return make(std::move(ivs), std::move(pts));
}

SlopeSet SlopeSet::scale(const Rational& factor) const {
    if (!(Rational(0) < factor)) throw invariant_error("scale factor must be positive");
    std::vector<SlopeInterval> ivs;
    for (const auto& iv : intervals_) {
        SlopeInterval n = iv;
        if (n.lo) n.lo = *n.lo * factor;
        if (n.hi) n.hi = *n.hi * factor;
        ivs.push_back(std::move(n));
    }
    std::vector<Rational> pts;
    for (const auto& q : points_) pts.push_back(q * factor);
    return make(std::move(ivs), std::move(pts));
}

std::optional<Integer> SlopeSet::reciprocal_integer_member() const {
    std::optional<Integer> best;
    auto offer = [&](const Integer& n) {
        if (n == 0) return;
        Rational r(Integer(1), n);
        if (!member(r)) return;
        if (!best || abs(n) < abs(*best)) best = n;
    };
    for (const auto& q : points_) {
        if (q.num() == 1) offer(q.den());
        if (q.num() == -1) offer(-q.den());
    }
    // For each interval, the reciprocals 1/n it can contain lie in a contiguous
    // integer range; probing around the boundary suffices for existence.
    auto probe_side = [&](const SlopeSet& s, int sign) {
        SlopeSet j = s.intersect(SlopeSet::interval(Rational(0), false, Rational(1), true));
        for (const auto& iv : j.intervals()) {
            Rational b = *iv.hi;  // finite: subset of (0,1]
            Integer n0 = (Rational(1) / b).ceil();
            for (Integer d = -1; d <= 2; ++d) {
                Integer n = n0 + d;
                if (n >= 1) offer(sign * n);
            }
        }
        for (const auto& q : j.points()) {
            if (q.num() == 1) offer(sign * q.den());
        }
    };
    probe_side(*this, 1);
    probe_side(negate(), -1);
    return best;
}

bool SlopeSet::operator==(const SlopeSet& o) const {
    if (points_ != o.points_) return false;
    if (intervals_.size() != o.intervals_.size()) return false;
    for (size_t i = 0; i < intervals_.size(); ++i) {
        const auto& a = intervals_[i];
        const auto& b = o.intervals_[i];
        if (a.lo != b.lo || a.hi != b.hi || a.lo_closed != b.lo_closed ||
            a.hi_closed != b.hi_closed)
            return false;
    }
    return true;
}

std::string SlopeSet::str() const {
    if (is_empty()) return "{}";
    if (is_all()) return "Q";
    struct Piece {
        bool is_point;
        size_t idx;
        std::optional<Rational> pos;
    };
    std::vector<Piece> order;
    for (size_t i = 0; i < intervals_.size(); ++i) order.push_back({false, i, intervals_[i].lo});
    for (size_t i = 0; i < points_.size(); ++i) order.push_back({true, i, points_[i]});
    std::sort(order.begin(), order.end(), [](const Piece& a, const Piece& b) {
        if (!a.pos) return true;
        if (!b.pos) return false;
        return *a.pos < *b.pos;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& p : order) {
        if (!first) out << " u ";
        first = false;
        if (p.is_point) {
            out << "{" << points_[p.idx].str() << "}";
        } else {
            const auto& iv = intervals_[p.idx];
            out << (iv.lo_closed ? "[" : "(");
            out << (iv.lo ? iv.lo->str() : "-inf");
            out << ",";
            out << (iv.hi ? iv.hi->str() : "inf");
            out << (iv.hi_closed ? "]" : ")");
        }
    }
    return out.str();
}

namespace {

struct SetScanner {
    const std::string& s;
    size_t i = 0;
    explicit SetScanner(const std::string& text) : s(text) {}
    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char next() {
        skip_ws();
        if (i >= s.size()) throw parse_error("unexpected end of slope set: '" + s + "'");
        return s[i++];
    }
    void expect(char c) {
        char g = next();
        if (g != c)
            throw parse_error(std::string("expected '") + c + "' in slope set: '" + s + "'");
    }
    std::string token() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '-' ||
                                s[i] == '+' || s[i] == '/'))
            ++i;
        if (i == start) throw parse_error("expected endpoint in slope set: '" + s + "'");
        return s.substr(start, i - start);
    }
};

}  // namespace

SlopeSet SlopeSet::parse(const std::string& text) {
    SetScanner sc(text);
    if (sc.done()) throw parse_error("empty slope set text");
    {
        size_t save = sc.i;
        std::string t;
        while (!sc.done()) t += sc.next();
        if (t == "Q") return all();
        if (t == "{}") return empty();
        sc.i = save;
    }
    std::vector<SlopeInterval> ivs;
    std::vector<Rational> pts;
    try {
        while (true) {
            char c = sc.peek();
            if (c == '(' || c == '[') {
                SlopeInterval iv;
                iv.lo_closed = (c == '[');
                sc.next();
                std::string lo = sc.token();
                if (lo == "-inf") {
                    if (iv.lo_closed) throw parse_error("'-inf' endpoint must be open");
                } else {
                    iv.lo = Rational::parse(lo);
                }
                sc.expect(',');
                std::string hi = sc.token();
                char close = sc.next();
                if (close != ')' && close != ']')
                    throw parse_error("expected ')' or ']' in slope set: '" + text + "'");
                iv.hi_closed = (close == ']');
                if (hi == "inf" || hi == "+inf") {
                    if (iv.hi_closed) throw parse_error("'inf' endpoint must be open");
                } else {
                    iv.hi = Rational::parse(hi);
                }
                ivs.push_back(std::move(iv));
            } else if (c == '{') {
                sc.next();
                if (sc.peek() == '}') {
                    sc.next();  // "{}" piece: empty contribution
                } else {
                    while (true) {
                        pts.push_back(Rational::parse(sc.token()));
                        char d = sc.next();
                        if (d == '}') break;
                        if (d != ',')
                            throw parse_error("expected ',' or '}' in slope set: '" + text + "'");
                    }
                }
            } else {
                throw parse_error("expected '(', '[' or '{' in slope set: '" + text + "'");
            }
            if (sc.done()) break;
            char sep = sc.next();
            if (sep != 'u' && sep != 'U')
                throw parse_error("expected 'u' between slope set pieces: '" + text + "'");
        }
        return make(std::move(ivs), std::move(pts));
    } catch (const invariant_error& e) {
        throw parse_error(std::string("ill-formed slope set: ") + e.what());
    }
}

TorusSlopes catalog_torus(int p, int q) {
    int ap = p < 0 ? -p : p;
    if (q < 2 || ap <= q) throw invariant_error("torus parameters require |p| > q >= 2");
    if (gcd(Integer(ap), Integer(q)) != 1) throw invariant_error("torus parameters must be coprime");
    Rational e(Integer(ap) * q - ap - q);
    TorusSlopes out;
    if (p > 0) {
        out.slo = SlopeSet::interval(std::nullopt, false, e, false);
        out.sl = SlopeSet::interval(e, true, std::nullopt, false);
    } else {
        out.slo = SlopeSet::interval(-e, false, std::nullopt, false);
        out.sl = SlopeSet::interval(std::nullopt, false, -e, true);
    }
    return out;
}

SpecialSlopes catalog_special(SpecialKnot k) {
    SpecialSlopes out;
    switch (k) {
        case SpecialKnot::Trivial: {
            out.slo_lower = SlopeSet::point(Rational(0));
            out.slo_exact = out.slo_lower;
            out.sl = SlopeSet::point(Rational(0)).complement();
            break;
        }
        case SpecialKnot::FigureEight: {
            out.slo_lower = SlopeSet::interval(Rational(-4), true, Rational(4), true);
            out.slo_contains_all_integers = true;
            out.sl = SlopeSet::empty();
            break;
        }
    }
    return out;
}

SpecialSlopes catalog_twist(int n) {
    if (n <= 1) throw invariant_error("twist catalog requires n > 1");
    SpecialSlopes out;
    out.slo_lower = SlopeSet::interval(Rational(-4 * n), false, Rational(4), true);
    out.sl = SlopeSet::empty();
    return out;
}

bool lspace_structure_check(const SlopeSet& sl, int genus) {
    if (sl.is_empty()) return true;
    Rational c(2 * genus - 1);
    if (sl == SlopeSet::interval(c, true, std::nullopt, false)) return true;
    if (sl == SlopeSet::interval(std::nullopt, false, -c, true)) return true;
    return false;
}

}  // namespace knotcalc
